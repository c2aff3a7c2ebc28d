#ifndef TANGO_FACTOR_HPP
#define TANGO_FACTOR_HPP

#include <cstdint>
#include <vector>

#include "tango/poly.hpp"

namespace tango {

constexpr uint64_t kDefaultSeed = 20240914;

struct PolyFactor {
    Poly factor;  // monic irreducible
    int multiplicity;
};

/// Full factorization over the coefficient field: squarefree decomposition,
/// distinct-degree splitting via x^{q^k} mod f, then randomized equal-degree
/// splitting driven by the given seed (recorded by callers for
/// reproducibility).  Factors come back sorted by (degree, coefficients).
std::vector<PolyFactor> factor(const Poly& f, uint64_t seed = kDefaultSeed);

/// Roots lying in the coefficient field itself, with multiplicities.
std::vector<std::pair<FieldElem, int>> roots_in_field(
    const Poly& f, uint64_t seed = kDefaultSeed);

/// True iff f factors into linear pieces over its own coefficient field.
bool splits_in_field(const Poly& f, uint64_t seed = kDefaultSeed);

struct SplittingRoots {
    FieldCtxPtr field;           // smallest F_{p^m} containing every root
    uint32_t extension_degree;   // m
    Poly lifted;                 // f with coefficients embedded into field
    std::vector<std::pair<FieldElem, int>> roots;  // sum of mults = deg f
    uint64_t seed;
};

/// Finds the splitting field of f within the degree cap and the full root
/// multiset there.  The sum of multiplicities equals deg f exactly.
SplittingRoots roots_in_splitting_field(const Poly& f,
                                        uint64_t seed = kDefaultSeed,
                                        uint32_t degree_cap = kDefaultDegreeCap);

}  // namespace tango

#endif
