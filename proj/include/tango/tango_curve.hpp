#ifndef TANGO_TANGO_CURVE_HPP
#define TANGO_TANGO_CURVE_HPP

#include <optional>
#include <string>

#include "tango/bethe.hpp"
#include "tango/certificate.hpp"

namespace tango {

/// Input data for the superelliptic family y^{bp-1} = h(x): h monic of
/// degree ap with gcd(h, h') = 1, h'' = 0, and gcd(a, bp-1) = 1.
/// Invariants are validated, never assumed.
struct TangoCurveSpec {
    uint32_t p;
    uint64_t a;
    uint64_t b;
    Poly h;
};

/// Empty iff the curve data satisfies all five defining conditions;
/// otherwise a human-readable list of violations (violations are data,
/// not errors).
std::vector<std::string> validate_spec(const TangoCurveSpec& s);

struct CurveInvariants {
    int64_t genus;
    int64_t infinity_points;
    int64_t ram_index_finite;
    int64_t ram_index_infinity;
};

/// Genus of the degree-n cyclic cover branched over r finite points (and
/// infinity), n prime to p: (n-1)(r-1)/2 - (gcd(n,r)-1)/2, together with the
/// point count and ramification indices over infinity.
CurveInvariants genus_superelliptic(int64_t n_exp, int64_t r_branch,
                                    uint32_t p);

/// (ap-1)(bp-2)/2, cross-checked against genus_superelliptic(bp-1, ap).
int64_t genus_tango_family(uint32_t p, uint64_t a, uint64_t b);

/// (2g-2)/p when p | 2g-2, nullopt otherwise (then no Tango structure can
/// exist on a genus-g curve).  Requires g >= 2.
std::optional<int64_t> tango_degree(int64_t g, uint32_t p);

/// 2g-2 + (2g-2)/p, evaluated both directly and through the expanded form
/// abp^2 + (ab-2a-b)p - 2a - b; the two must agree.
int64_t moduli_dimension(uint32_t p, uint64_t a, uint64_t b);

/// h(gamma)^{-1} * h(1/x + gamma) * x^{deg h + 1}: monic, one degree up,
/// roots 0 and 1/(z_i - gamma) over the roots z_i of h.  Requires
/// h(gamma) != 0.
Poly mobius_transport(const Poly& h, const FieldElem& gamma);

/// The full certification chain for y^{bp-1} = h(x): spec validation, root
/// splitting, the Mobius-transported second-derivative criterion, the base
/// pre-Tango certificate, tame pullback of the frame monodromies, the drop
/// of the monodromy -1 points, and the genus/degree bookkeeping.
Certificate certify_tango(const TangoCurveSpec& s, uint64_t seed = kDefaultSeed,
                          uint32_t degree_cap = kDefaultDegreeCap);

/// The regression family y^{lp-1} = f(x^p) - x (lp >= 4): a = b = l,
/// h = f(x^p) - x, h' = -1.  certify_tango on the result must say TANGO.
TangoCurveSpec raynaud_family(uint32_t p, uint32_t l, const Poly& f_small);

}  // namespace tango

#endif
