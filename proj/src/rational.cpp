#include "tango/rational.hpp"

#include <stdexcept>

namespace tango {

RationalFn::RationalFn(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::one(num_.ctx());
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    FieldElem lead = den_.leading();
    if (!lead.is_one()) {
        FieldElem inv = lead.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
    // common-denominator sum over the lcm keeps the final reduction small
    Poly g = poly_gcd(den_, o.den_);
    if (g.is_one())
        return RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    Poly left = o.den_ / g;
    Poly right = den_ / g;
    return RationalFn(num_ * left + o.num_ * right, den_ * left);
}

RationalFn RationalFn::operator-(const RationalFn& o) const {
    return *this + (-o);
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
    return RationalFn(num_ * o.num_, den_ * o.den_);
}

RationalFn RationalFn::operator/(const RationalFn& o) const {
    if (o.is_zero()) throw std::domain_error("division by the zero function");
    return RationalFn(num_ * o.den_, den_ * o.num_);
}

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_); }

RationalFn RationalFn::derivative() const {
    return RationalFn(num_.derivative() * den_ - num_ * den_.derivative(),
                      den_ * den_);
}

RationalFn RationalFn::derivative(size_t k) const {
    RationalFn r = *this;
    for (size_t i = 0; i < k; ++i) r = r.derivative();
    return r;
}

RationalFn RationalFn::pth_power() const {
    return RationalFn(num_.pth_power(), den_.pth_power());
}

FieldElem RationalFn::eval(const FieldElem& a) const {
    FieldElem d = den_.eval(a);
    if (d.is_zero()) throw std::domain_error("evaluation at a pole");
    return num_.eval(a) / d;
}

std::string RationalFn::to_string(const std::string& var) const {
    if (is_poly()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RationalFn dlog(const Poly& g) {
    if (g.is_zero()) throw std::domain_error("dlog of zero");
    return RationalFn(g.derivative(), g);
}

}  // namespace tango
