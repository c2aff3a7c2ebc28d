#include "tango/series.hpp"

#include <algorithm>
#include <sstream>

namespace tango {

TruncSeries::TruncSeries(FieldCtxPtr ctx, long low, std::vector<FieldElem> c,
                         long known_to)
    : ctx_(std::move(ctx)), low_(low), c_(std::move(c)), known_to_(known_to) {
    normalize();
}

void TruncSeries::normalize() {
    if (known_to_ < low_ + static_cast<long>(c_.size()))
        c_.resize(static_cast<size_t>(std::max(0L, known_to_ - low_)));
    while (!c_.empty() && c_.front().is_zero()) {
        c_.erase(c_.begin());
        ++low_;
    }
    if (c_.empty()) low_ = known_to_;
}

TruncSeries TruncSeries::zero(const FieldCtxPtr& ctx, long known_to) {
    return TruncSeries(ctx, known_to, {}, known_to);
}

TruncSeries TruncSeries::monomial(const FieldElem& c, long e, long known_to) {
    if (e >= known_to)
        throw SeriesPrecisionError("monomial exponent beyond precision");
    return TruncSeries(c.ctx(), e, {c}, known_to);
}

TruncSeries TruncSeries::from_coeffs(const FieldCtxPtr& ctx, long low,
                                     std::vector<FieldElem> coeffs) {
    long known = low + static_cast<long>(coeffs.size());
    return TruncSeries(ctx, low, std::move(coeffs), known);
}

std::optional<long> TruncSeries::valuation() const {
    if (c_.empty()) return std::nullopt;
    return low_;
}

bool TruncSeries::is_zero_within_precision() const { return c_.empty(); }

bool TruncSeries::is_regular_within_precision() const {
    return c_.empty() || low_ >= 0;
}

FieldElem TruncSeries::coeff(long e) const {
    if (e >= known_to_)
        throw SeriesPrecisionError(
            "coefficient of t^" + std::to_string(e) +
            " requested but series is known only modulo t^" +
            std::to_string(known_to_));
    if (e < low_ || e >= low_ + static_cast<long>(c_.size()))
        return ctx_->zero();
    return c_[static_cast<size_t>(e - low_)];
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    long known = std::min(known_to_, o.known_to_);
    long low = std::min(low_, o.low_);
    if (low > known) low = known;
    std::vector<FieldElem> r;
    for (long e = low; e < known; ++e) {
        FieldElem a = (e < known_to_) ? coeff(e) : ctx_->zero();
        FieldElem b = (e < o.known_to_) ? o.coeff(e) : ctx_->zero();
        r.push_back(a + b);
    }
    return TruncSeries(ctx_, low, std::move(r), known);
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    return *this + (-o);
}

TruncSeries TruncSeries::operator-() const {
    std::vector<FieldElem> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(-c);
    return TruncSeries(ctx_, low_, std::move(r), known_to_);
}

TruncSeries TruncSeries::operator*(const FieldElem& s) const {
    std::vector<FieldElem> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(c * s);
    return TruncSeries(ctx_, low_, std::move(r), known_to_);
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    // an exact zero factor keeps the better of the two precision bounds
    if (c_.empty() && o.c_.empty())
        return zero(ctx_, std::max(known_to_ + 0L, o.known_to_));
    if (c_.empty()) return zero(ctx_, known_to_ + (o.c_.empty() ? 0 : o.low_));
    if (o.c_.empty()) return zero(ctx_, o.known_to_ + low_);
    long low = low_ + o.low_;
    long known = std::min(known_to_ + o.low_, o.known_to_ + low_);
    std::vector<FieldElem> r(static_cast<size_t>(known - low), ctx_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            long e = low_ + static_cast<long>(i) + o.low_ +
                     static_cast<long>(j);
            if (e >= known) break;
            size_t k = static_cast<size_t>(e - low);
            r[k] = r[k] + c_[i] * o.c_[j];
        }
    }
    return TruncSeries(ctx_, low, std::move(r), known);
}

TruncSeries TruncSeries::derivative() const {
    std::vector<FieldElem> r;
    r.reserve(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        long e = low_ + static_cast<long>(i);
        r.push_back(c_[i] * ctx_->from_int(e));
    }
    return TruncSeries(ctx_, low_ - 1, std::move(r), known_to_ - 1);
}

TruncSeries TruncSeries::shifted(long k) const {
    return TruncSeries(ctx_, low_ + k, c_, known_to_ + k);
}

TruncSeries TruncSeries::truncated(long new_known_to) const {
    return TruncSeries(ctx_, low_, c_, std::min(known_to_, new_known_to));
}

TruncSeries TruncSeries::substitute_monomial(long R) const {
    if (R < 1) throw std::domain_error("substitution degree must be >= 1");
    std::vector<FieldElem> r(c_.empty() ? 0
                                        : (c_.size() - 1) * static_cast<size_t>(R) + 1,
                             ctx_->zero());
    for (size_t i = 0; i < c_.size(); ++i)
        r[i * static_cast<size_t>(R)] = c_[i];
    return TruncSeries(ctx_, low_ * R, std::move(r), known_to_ * R);
}

TruncSeries TruncSeries::inverse() const {
    auto val = valuation();
    if (!val)
        throw SeriesPrecisionError(
            "cannot invert a series that is zero within its precision");
    long v = *val;
    // the unit part w (this = t^v w) is known modulo t^{known_to - v};
    // compute its inverse over that whole window, reading coefficients
    // beyond the stored array as the exact zeros they represent
    size_t len = static_cast<size_t>(known_to_ - v);
    auto w_coeff = [&](size_t j) {
        return j < c_.size() ? c_[j] : ctx_->zero();
    };
    FieldElem u0 = c_[0].inverse();
    std::vector<FieldElem> inv(len, ctx_->zero());
    inv[0] = u0;
    for (size_t k = 1; k < len; ++k) {
        FieldElem s = ctx_->zero();
        for (size_t j = 1; j <= k; ++j) s = s + w_coeff(j) * inv[k - j];
        inv[k] = -u0 * s;
    }
    // (t^v unit)^{-1} = t^{-v} unit^{-1}; precision window shortens by 2v
    return TruncSeries(ctx_, -v, std::move(inv), known_to_ - 2 * v);
}

bool TruncSeries::operator==(const TruncSeries& o) const {
    long known = std::min(known_to_, o.known_to_);
    long low = std::min(low_, o.low_);
    for (long e = std::min(low, known); e < known; ++e)
        if (coeff(e) != o.coeff(e)) return false;
    return true;
}

std::string TruncSeries::to_string(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        long e = low_ + static_cast<long>(i);
        if (!first) os << " + ";
        first = false;
        os << c_[i].to_string();
        if (e != 0) os << "*" << var << "^" << e;
    }
    if (first) os << "0";
    os << " + O(" << var << "^" << known_to_ << ")";
    return os.str();
}

Sl2DiscConn::Sl2DiscConn(TruncSeries u) : u_(std::move(u)) {
    if (!u_.is_regular_within_precision())
        throw std::domain_error(
            "disc connection requires u of nonnegative valuation");
}

Sl2DiscConn build_oper_disc(const TruncSeries& u) { return Sl2DiscConn(u); }

Sl2GaugeEntries gauge_by_upper(const Sl2DiscConn& c, const TruncSeries& beta) {
    const auto& u = c.u();
    const auto& ctx = u.ctx();
    auto bval = beta.valuation();
    if (bval && *bval < -1)
        throw std::domain_error("gauge parameter must have valuation >= -1");
    long prec = std::min(u.known_to(), beta.known_to());
    TruncSeries inv_t = TruncSeries::monomial(ctx->one(), -1, prec);
    TruncSeries a = inv_t + u;  // the (1,1) entry before gauging
    TruncSeries e11 = a + beta;
    TruncSeries e12 = -beta.derivative() -
                      (beta * a) * ctx->from_int(2) - beta * beta;
    TruncSeries e21 = TruncSeries::monomial(ctx->one(), 0, prec);
    TruncSeries e22 = -e11;
    return {std::move(e11), std::move(e12), std::move(e21), std::move(e22)};
}

std::optional<TruncSeries> extends_to_disc(const Sl2DiscConn& c) {
    const auto& u = c.u();
    const long p = u.ctx()->characteristic();
    if (u.known_to() < 2 * p)
        throw SeriesPrecisionError(
            "extends_to_disc needs truncation order >= 2p");
    if (!u.coeff(0).is_zero()) return std::nullopt;
    // beta_+ = -u gauges the connection into the canonical form
    // d/dt + [[0, w], [1, 0]]; pole-freeness of w is rechecked explicitly.
    TruncSeries beta_plus = -u;
    TruncSeries beta =
        TruncSeries::monomial(-u.ctx()->one(), -1, u.known_to()) + beta_plus;
    Sl2GaugeEntries entries = gauge_by_upper(c, beta);
    if (!entries.e12.is_regular_within_precision() ||
        !entries.e11.is_zero_within_precision())
        throw std::logic_error("extends_to_disc: gauge verification failed");
    return beta_plus;
}

bool nilpotent_monodromy_dormancy_check(const FieldElem& v) {
    return v.is_zero();
}

bool dormant_exponent_check_sl2(const FieldElem& q) {
    return q.in_prime_field() && !q.is_zero();
}

}  // namespace tango
