#include "tango/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace tango {

Poly::Poly(FieldCtxPtr ctx, std::vector<FieldElem> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::one(const FieldCtxPtr& ctx) {
    return Poly(ctx, {ctx->one()});
}

Poly Poly::x(const FieldCtxPtr& ctx) {
    return Poly(ctx, {ctx->zero(), ctx->one()});
}

Poly Poly::constant(const FieldElem& c) {
    return Poly(c.ctx(), {c});
}

Poly Poly::monomial(const FieldElem& c, size_t k) {
    std::vector<FieldElem> v(k + 1, c.ctx()->zero());
    v[k] = c;
    return Poly(c.ctx(), std::move(v));
}

Poly Poly::from_ints(const FieldCtxPtr& ctx,
                     const std::vector<int64_t>& coeffs) {
    std::vector<FieldElem> v;
    v.reserve(coeffs.size());
    for (int64_t c : coeffs) v.push_back(ctx->from_int(c));
    return Poly(ctx, std::move(v));
}

Poly Poly::from_roots(const FieldCtxPtr& ctx,
                      const std::vector<FieldElem>& roots) {
    Poly f = Poly::one(ctx);
    for (const auto& r : roots)
        f = f * Poly(ctx, {-r, ctx->one()});
    return f;
}

FieldElem Poly::coeff(size_t k) const {
    if (k < c_.size()) return c_[k];
    return ctx_->zero();
}

FieldElem Poly::leading() const {
    if (c_.empty()) return ctx_->zero();
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<FieldElem> r(std::max(c_.size(), o.c_.size()), ctx_->zero());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return Poly(ctx_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<FieldElem> r(std::max(c_.size(), o.c_.size()), ctx_->zero());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] - o.c_[i];
    return Poly(ctx_, std::move(r));
}

Poly Poly::operator-() const {
    std::vector<FieldElem> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(-c);
    return Poly(ctx_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(ctx_);
    std::vector<FieldElem> r(c_.size() + o.c_.size() - 1, ctx_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return Poly(ctx_, std::move(r));
}

Poly Poly::operator*(const FieldElem& s) const {
    std::vector<FieldElem> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(c * s);
    return Poly(ctx_, std::move(r));
}

bool Poly::operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    if (degree() < d.degree()) return {Poly(ctx_), *this};
    FieldElem inv_lead = d.leading().inverse();
    std::vector<FieldElem> rem = c_;
    std::vector<FieldElem> quo(degree() - d.degree() + 1, ctx_->zero());
    for (int i = degree(); i >= d.degree(); --i) {
        FieldElem c = rem[i] * inv_lead;
        if (c.is_zero()) continue;
        quo[i - d.degree()] = c;
        for (int j = 0; j <= d.degree(); ++j)
            rem[i - d.degree() + j] =
                rem[i - d.degree() + j] - c * d.c_[j];
    }
    return {Poly(ctx_, std::move(quo)), Poly(ctx_, std::move(rem))};
}

FieldElem Poly::eval(const FieldElem& a) const {
    FieldElem acc = ctx_->zero();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * a + c_[i];
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

Poly Poly::derivative(size_t k) const {
    Poly f = *this;
    for (size_t round = 0; round < k; ++round) {
        if (f.is_zero()) break;
        std::vector<FieldElem> r;
        for (size_t m = 1; m < f.c_.size(); ++m)
            r.push_back(f.c_[m] * ctx_->from_int(static_cast<int64_t>(m)));
        f = Poly(ctx_, std::move(r));
    }
    return f;
}

Poly Poly::compose(const Poly& g) const {
    Poly acc(ctx_);
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * g + Poly::constant(c_[i]);
    return acc;
}

Poly Poly::taylor_shift(const FieldElem& a) const {
    Poly acc(ctx_);
    Poly xa(ctx_, {a, ctx_->one()});
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * xa + Poly::constant(c_[i]);
    return acc;
}

Poly Poly::pth_power() const {
    if (is_zero()) return *this;
    const uint32_t p = ctx_->characteristic();
    std::vector<FieldElem> r(p * (c_.size() - 1) + 1, ctx_->zero());
    for (size_t i = 0; i < c_.size(); ++i)
        r[p * i] = c_[i].pow(p);
    return Poly(ctx_, std::move(r));
}

Poly Poly::reverse() const {
    std::vector<FieldElem> r(c_.rbegin(), c_.rend());
    return Poly(ctx_, std::move(r));
}

Poly Poly::pow_mod(unsigned __int128 e, const Poly& m) const {
    Poly acc = Poly::one(ctx_) % m;
    Poly sq = *this % m;
    while (e) {
        if (e & 1) acc = (acc * sq) % m;
        sq = (sq * sq) % m;
        e >>= 1;
    }
    return acc;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || !c_[i].is_one()) os << c_[i].to_string();
        if (i > 0) {
            if (!c_[i].is_one()) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly poly_gcd(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero())
        throw std::domain_error("gcd(0, 0) is undefined");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = a % b;
        a = b;
        b = r;
    }
    return a.monic();
}

bool gcd_with_derivative_is_one(const Poly& f) {
    Poly d = f.derivative();
    if (d.is_zero()) return f.degree() == 0;  // gcd(f, 0) = f up to scale
    return poly_gcd(f, d).is_one();
}

Poly poly_pth_root(const Poly& f) {
    if (f.is_zero()) return f;
    const uint32_t p = f.ctx()->characteristic();
    std::vector<FieldElem> r(f.degree() / p + 1, f.ctx()->zero());
    for (int i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i).is_zero()) continue;
        if (i % p != 0)
            throw std::domain_error(
                "p-th root of a polynomial not supported on p-th powers");
        r[i / p] = inv_frobenius(f.coeff(i));
    }
    return Poly(f.ctx(), std::move(r));
}

}  // namespace tango
