#ifndef TANGO_BETHE_HPP
#define TANGO_BETHE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "tango/connection.hpp"
#include "tango/forms.hpp"

namespace tango {

/// Pairing data for the residual system: an m x m matrix of coroot pairings
/// (diagonal entries 2) and an m x r matrix of coweight pairings.  Integer
/// entries; reduced into the field on use.
struct CartanDatum {
    std::vector<std::vector<int64_t>> pairing;         // m x m
    std::vector<std::vector<int64_t>> weight_pairing;  // m x r

    size_t m() const { return pairing.size(); }
    size_t r() const {
        return weight_pairing.empty() ? 0 : weight_pairing.front().size();
    }
    void validate() const;

    /// The simple sl2 datum: r = 0 and every pairing entry equal to 2.
    static CartanDatum sl2_simple(size_t m);
};

/// A configuration to test against the residual system: r marked points x
/// with coweight data and m unknowns z, all distinct and disjoint.
struct BetheInstance {
    FieldCtxPtr ctx;
    std::vector<FieldElem> x;
    std::vector<FieldElem> z;
    CartanDatum datum;

    void validate() const;
};

/// The j-th residual (0-based):
///   sum_i <alpha_j, lambda_i> / (z_j - x_i)
///     - sum_{s != j} <alpha_j, alpha_s> / (z_j - z_s).
FieldElem bethe_residual(const BetheInstance& inst, size_t j);

/// True iff every residual vanishes.
bool is_solution(const BetheInstance& inst);

/// The r = 0 all-pairings-2 instance on the given distinct points.  Its
/// residuals are -2 * sum_{s != j} 1/(z_j - z_s); the zero set coincides
/// with the divided-by-2 simple system since p >= 3.
BetheInstance sl2_simple_instance(const std::vector<FieldElem>& z);
/// The simple-form value sum_{s != j} 1/(z_j - z_s) itself.
FieldElem simple_residual(const std::vector<FieldElem>& z, size_t j);

struct MasterPoly {
    Poly f;  // monic
    std::optional<std::vector<FieldElem>> roots;
};

MasterPoly master_from_roots(const std::vector<FieldElem>& z);

/// True iff f'' = 0 and gcd(f, f') = 1.  Requires deg f = 1 mod p.
bool criterion_second_derivative(const Poly& f);

/// Verifies f''(z_j) = 2 f'(z_j) sum_{s != j} 1/(z_j - z_s) at every root;
/// an algebraic identity, so failure means an arithmetic bug.
bool per_point_identity_check(const Poly& f, const std::vector<FieldElem>& z);

/// Cross-checks that the simple residual system has a solution at z exactly
/// when the master polynomial passes the second-derivative criterion, and
/// returns the shared truth value.  A mismatch throws: that is a library
/// bug, not a data condition.  Requires |z| = 1 mod p.
bool solution_criterion_equivalence(const std::vector<FieldElem>& z);

/// All monic f of degree lp+1 over F_{p^n} with f'' = 0 (support on
/// exponents 0,1 mod p) and gcd(f, f') = 1, in lexicographic coefficient
/// order.  With require_split, keeps only those with lp+1 distinct roots in
/// F_{p^n} itself.
std::vector<Poly> enumerate_master_polys(uint32_t p, uint32_t n, uint32_t l,
                                         bool require_split = false,
                                         uint64_t seed = kDefaultSeed,
                                         uint64_t search_cap = uint64_t(1) << 24);

/// The scalar residue bookkeeping for the abelian side: admissibility reads
/// 2m - sum q_i = 2 (mod p) for prime-field scalars q_i.
bool miura_sum_condition(const FieldCtxPtr& ctx,
                         const std::vector<FieldElem>& qs, uint64_t m);

/// The scalar connection form sum (q_i + 1)/(x - x_i) + sum 2/(x - z_j),
/// built only when the sum condition holds; the residue-at-infinity
/// consistency (all residues including infinity sum to zero) is asserted.
Differential build_miura_scalar(const std::vector<FieldElem>& xs,
                                const std::vector<FieldElem>& qs,
                                const std::vector<FieldElem>& zs);

}  // namespace tango

#endif
