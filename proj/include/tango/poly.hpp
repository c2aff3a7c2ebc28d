#ifndef TANGO_POLY_HPP
#define TANGO_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tango/field.hpp"

namespace tango {

/// Exact univariate polynomial over F_{p^n}.  Coefficients ascending,
/// trailing zeros stripped; the zero polynomial has an empty coefficient
/// vector and degree() == -1 (standing in for deg 0 = -infinity).
class Poly {
public:
    explicit Poly(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {}
    Poly(FieldCtxPtr ctx, std::vector<FieldElem> coeffs);

    static Poly zero(const FieldCtxPtr& ctx) { return Poly(ctx); }
    static Poly one(const FieldCtxPtr& ctx);
    static Poly x(const FieldCtxPtr& ctx);
    static Poly constant(const FieldElem& c);
    /// c * x^k
    static Poly monomial(const FieldElem& c, size_t k);
    /// From small integer coefficients (ascending), reduced into the field.
    static Poly from_ints(const FieldCtxPtr& ctx,
                          const std::vector<int64_t>& coeffs);
    /// prod (x - r) over the given points.
    static Poly from_roots(const FieldCtxPtr& ctx,
                           const std::vector<FieldElem>& roots);

    const FieldCtxPtr& ctx() const { return ctx_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    FieldElem coeff(size_t k) const;
    FieldElem leading() const;
    const std::vector<FieldElem>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const FieldElem& s) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }

    FieldElem eval(const FieldElem& a) const;
    Poly monic() const;
    /// k-th formal derivative (characteristic-p rules).
    Poly derivative(size_t k = 1) const;
    /// this(g(x)), schoolbook composition.
    Poly compose(const Poly& g) const;
    /// this(x + a).
    Poly taylor_shift(const FieldElem& a) const;
    /// this^p computed the cheap way: coefficient Frobenius, exponents * p.
    Poly pth_power() const;
    /// Reversal x^{degree} * this(1/x).
    Poly reverse() const;
    /// this^e mod m.
    Poly pow_mod(unsigned __int128 e, const Poly& m) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();

    FieldCtxPtr ctx_;
    std::vector<FieldElem> c_;
};

/// Monic gcd; gcd(f, 0) = monic f, gcd(0, 0) is an error.
Poly poly_gcd(const Poly& f, const Poly& g);

/// True iff gcd(f, f') = 1.  In characteristic p this is strictly stronger
/// than squarefreeness whenever f' vanishes identically.
bool gcd_with_derivative_is_one(const Poly& f);

/// Exact p-th root of a polynomial supported on exponents divisible by p.
Poly poly_pth_root(const Poly& f);

}  // namespace tango

#endif
