#ifndef TANGO_FORMS_HPP
#define TANGO_FORMS_HPP

#include "tango/factor.hpp"
#include "tango/rational.hpp"

namespace tango {

/// A denominator that does not factor into linear pieces over the ambient
/// field where the operation needs it to.
struct NonSplitError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A rational 1-form h(x) dx on the affine chart of the projective line.
/// Behavior at infinity is exposed only through residue_at_infinity.
class Differential {
public:
    explicit Differential(RationalFn h) : h_(std::move(h)) {}
    static Differential of(const RationalFn& h) { return Differential(h); }
    static Differential of_poly(const Poly& h) {
        return Differential(RationalFn::from_poly(h));
    }
    static Differential zero(const FieldCtxPtr& ctx) {
        return Differential(RationalFn::zero(ctx));
    }

    const RationalFn& coefficient() const { return h_; }
    const FieldCtxPtr& ctx() const { return h_.ctx(); }
    bool is_zero() const { return h_.is_zero(); }

    Differential operator+(const Differential& o) const {
        return Differential(h_ + o.h_);
    }
    Differential operator-(const Differential& o) const {
        return Differential(h_ - o.h_);
    }
    bool operator==(const Differential& o) const { return h_ == o.h_; }
    bool operator!=(const Differential& o) const { return h_ != o.h_; }

    std::string to_string() const { return "(" + h_.to_string() + ") dx"; }

private:
    RationalFn h_;
};

struct PoleExpansion {
    FieldElem pole;
    int order;                       // pole order m >= 1
    std::vector<FieldElem> coeffs;   // coeffs[k] multiplies 1/(x-a)^{k+1}
};

struct PartialFractions {
    Poly polynomial_part;
    std::vector<PoleExpansion> poles;
};

/// Exact partial-fraction decomposition; requires the denominator to split
/// over the ambient field (NonSplitError otherwise).  Recomposition gives
/// back the input identically.
PartialFractions partial_fractions(const RationalFn& r,
                                   uint64_t seed = kDefaultSeed);
RationalFn recompose(const PartialFractions& pf);

/// Coefficient of 1/(x-a); 0 when a is not a pole.  Poles of order >= 2 are
/// fine; a non-split denominator is an error when check_split is set.
FieldElem residue_at(const Differential& w, const FieldElem& a,
                     bool check_split = true, uint64_t seed = kDefaultSeed);

/// Order of the pole of r at a (0 when regular there).
int pole_order(const RationalFn& r, const FieldElem& a);

/// -(sum of finite residues); needs the full pole set, hence a split
/// denominator.
FieldElem residue_at_infinity(const Differential& w,
                              uint64_t seed = kDefaultSeed);

/// The Cartier operator C on rational 1-forms: additive, semilinear
/// (C(u^p v dx) = u C(v dx)), kills exact forms and fixes dlog forms.
/// Computed from the decomposition h = N/B^p with N = num * den^{p-1}:
/// bucket N by exponent mod p and take the p-th root of the x^{p-1} bucket.
Differential cartier(const Differential& w);

/// True iff C(w) = 0, i.e. w is locally exact.
bool in_cartier_kernel(const Differential& w);

}  // namespace tango

#endif
