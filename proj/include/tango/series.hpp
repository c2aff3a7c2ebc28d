#ifndef TANGO_SERIES_HPP
#define TANGO_SERIES_HPP

#include <optional>

#include "tango/field.hpp"

namespace tango {

/// An operation needed a coefficient beyond the tracked precision.
struct SeriesPrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Truncated Laurent series: coefficients are exact on the window
/// [low, known_to) and unknown from known_to on; exponents below the window
/// are exact zeros.  Every operation computes the surviving precision and
/// throws SeriesPrecisionError instead of silently degrading to garbage.
class TruncSeries {
public:
    /// The zero series known modulo t^known_to.
    static TruncSeries zero(const FieldCtxPtr& ctx, long known_to);
    /// c * t^e, known modulo t^known_to.
    static TruncSeries monomial(const FieldElem& c, long e, long known_to);
    /// Coefficients for exponents low, low+1, ...; known mod t^{low+len}.
    static TruncSeries from_coeffs(const FieldCtxPtr& ctx, long low,
                                   std::vector<FieldElem> coeffs);

    const FieldCtxPtr& ctx() const { return ctx_; }
    long known_to() const { return known_to_; }
    /// Exponent of the first nonzero coefficient; nullopt when the series is
    /// zero within its precision window.
    std::optional<long> valuation() const;
    bool is_zero_within_precision() const;
    /// True iff no nonzero coefficient sits at a negative exponent.
    bool is_regular_within_precision() const;

    /// Coefficient of t^e; exact zero below the window, error at or beyond
    /// known_to.
    FieldElem coeff(long e) const;

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries operator-() const;
    TruncSeries operator*(const FieldElem& s) const;

    TruncSeries derivative() const;
    /// Multiplication by t^k.
    TruncSeries shifted(long k) const;
    TruncSeries truncated(long new_known_to) const;
    /// Substitution t -> s^R (R >= 1): stretches exponents by R.
    TruncSeries substitute_monomial(long R) const;
    /// Multiplicative inverse; requires a nonzero coefficient in the window.
    TruncSeries inverse() const;

    bool operator==(const TruncSeries& o) const;

    std::string to_string(const std::string& var = "t") const;

private:
    TruncSeries(FieldCtxPtr ctx, long low, std::vector<FieldElem> c,
                long known_to);
    void normalize();

    FieldCtxPtr ctx_;
    long low_ = 0;
    std::vector<FieldElem> c_;  // c_[i] is the coefficient of t^{low_+i}
    long known_to_ = 0;
};

/// The sl2 disc connection d/dt + [[1/t + u, 0], [1, -1/t - u]] encoded by
/// the scalar series u(t) with nonnegative valuation.
class Sl2DiscConn {
public:
    explicit Sl2DiscConn(TruncSeries u);
    const TruncSeries& u() const { return u_; }

private:
    TruncSeries u_;
};

Sl2DiscConn build_oper_disc(const TruncSeries& u);

struct Sl2GaugeEntries {
    TruncSeries e11, e12, e21, e22;
};

/// Gauge the disc connection by the unipotent upper-triangular element with
/// off-diagonal -beta: entries become
///   (1,1) = 1/t + u + beta        (1,2) = -beta' - 2 beta (1/t + u) - beta^2
///   (2,1) = 1                     (2,2) = -(1,1)
Sl2GaugeEntries gauge_by_upper(const Sl2DiscConn& c, const TruncSeries& beta);

/// Decides whether the log disc connection extends to an honest connection
/// on the disc: possible iff u(0) = 0, in which case beta = -1/t + beta_+
/// with the returned regular beta_+ produces a pole-free gauge.  Returns
/// nullopt iff u(0) != 0.  Requires precision >= 2p.
std::optional<TruncSeries> extends_to_disc(const Sl2DiscConn& c);

/// Mod-t dormancy for a nilpotent residue part v: the p-power-minus-
/// identity obstruction vanishes on a nilpotent scalar only at v = 0.
bool nilpotent_monodromy_dormancy_check(const FieldElem& v);

/// Exponent admissibility in the sl2 scalar encoding: q must be Frobenius-
/// fixed (prime field) and nonzero (regular).
bool dormant_exponent_check_sl2(const FieldElem& q);

}  // namespace tango

#endif
