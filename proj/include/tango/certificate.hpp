#ifndef TANGO_CERTIFICATE_HPP
#define TANGO_CERTIFICATE_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "tango/forms.hpp"

namespace tango {

using Json = nlohmann::ordered_json;

constexpr const char* kToolVersion = "1.0.0";

// Serialization conventions: field elements are little-endian digit arrays
// in base p; polynomials are ascending coefficient arrays of those.
Json field_to_json(const FieldCtx& ctx);
Json elem_to_json(const FieldElem& e);
Json poly_to_json(const Poly& f);
Json rational_to_json(const RationalFn& r);
Json differential_to_json(const Differential& w);

struct CertStep {
    std::string name;
    bool passed;
    Json witness;
};

/// A machine-checkable verification transcript: ordered named checks with
/// witnesses, an overall verdict, and enough context (field modulus, seed)
/// to re-run every step independently.
struct Certificate {
    Json input;
    std::vector<CertStep> steps;
    std::string verdict;
    FieldCtxPtr field;
    uint64_t seed = 0;
    Json extra;  // verdict-adjacent summary values, merged at top level

    bool all_steps_passed() const;
    Json to_json() const;
};

}  // namespace tango

#endif
