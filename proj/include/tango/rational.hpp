#ifndef TANGO_RATIONAL_HPP
#define TANGO_RATIONAL_HPP

#include "tango/poly.hpp"

namespace tango {

/// Reduced rational function num/den over F_{p^n}.  Canonical form is
/// unique: gcd(num, den) = 1 and den monic; zero is 0/1.
class RationalFn {
public:
    explicit RationalFn(FieldCtxPtr ctx)
        : num_(Poly::zero(ctx)), den_(Poly::one(ctx)) {}
    RationalFn(Poly num, Poly den);

    static RationalFn of(const Poly& num, const Poly& den) {
        return RationalFn(num, den);
    }
    static RationalFn from_poly(const Poly& p) {
        return RationalFn(p, Poly::one(p.ctx()));
    }
    static RationalFn zero(const FieldCtxPtr& ctx) { return RationalFn(ctx); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const FieldCtxPtr& ctx() const { return num_.ctx(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_one(); }

    RationalFn operator+(const RationalFn& o) const;
    RationalFn operator-(const RationalFn& o) const;
    RationalFn operator*(const RationalFn& o) const;
    RationalFn operator/(const RationalFn& o) const;
    RationalFn operator-() const;
    bool operator==(const RationalFn& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFn& o) const { return !(*this == o); }

    /// (num/den)' by the quotient rule, reduced.
    RationalFn derivative() const;
    /// k-fold derivative.
    RationalFn derivative(size_t k) const;
    /// this^p via coefficient Frobenius on both parts.
    RationalFn pth_power() const;
    /// Evaluation; the point must not be a pole.
    FieldElem eval(const FieldElem& a) const;

    std::string to_string(const std::string& var = "x") const;

private:
    Poly num_;
    Poly den_;
};

/// Logarithmic derivative g'/g of a nonzero polynomial.
RationalFn dlog(const Poly& g);

}  // namespace tango

#endif
