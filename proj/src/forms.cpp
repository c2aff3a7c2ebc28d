#include "tango/forms.hpp"

#include <stdexcept>

namespace tango {
namespace {

// Laurent data of r at the point a: pole order m and the coefficients of
// (x-a)^{-m} ... (x-a)^{-1}.  Exact: shift to t = x-a, invert the unit part
// of the denominator as a power series mod t^m and multiply.
std::pair<int, std::vector<FieldElem>> local_principal_part(
    const RationalFn& r, const FieldElem& a) {
    const auto& ctx = r.ctx();
    Poly den = r.den();
    int m = 0;
    Poly lin(ctx, {-a, ctx->one()});
    for (;;) {
        auto [q, rem] = den.divmod(lin);
        if (!rem.is_zero()) break;
        den = q;
        ++m;
    }
    if (m == 0) return {0, {}};
    // r = num / ((x-a)^m * den), den(a) != 0
    Poly na = r.num().taylor_shift(a);   // series in t
    Poly ga = den.taylor_shift(a);
    // invert ga mod t^m
    std::vector<FieldElem> inv(m, ctx->zero());
    FieldElem g0 = ga.coeff(0).inverse();
    inv[0] = g0;
    for (int k = 1; k < m; ++k) {
        FieldElem s = ctx->zero();
        for (int j = 1; j <= k; ++j) s = s + ga.coeff(j) * inv[k - j];
        inv[k] = -g0 * s;
    }
    std::vector<FieldElem> prod(m, ctx->zero());
    for (int k = 0; k < m; ++k) {
        FieldElem s = ctx->zero();
        for (int j = 0; j <= k; ++j) s = s + na.coeff(j) * inv[k - j];
        prod[k] = s;
    }
    // prod[k] is the coefficient of t^{k-m}; reorder so coeffs[i] multiplies
    // 1/(x-a)^{i+1}
    std::vector<FieldElem> coeffs(m, ctx->zero());
    for (int k = 0; k < m; ++k) coeffs[m - 1 - k] = prod[k];
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    int order = static_cast<int>(coeffs.size());
    return {order, coeffs};
}

void require_split_denominator(const RationalFn& r, uint64_t seed) {
    if (!splits_in_field(r.den(), seed))
        throw NonSplitError(
            "denominator does not split over the ambient field; extend via "
            "roots_in_splitting_field first");
}

}  // namespace

PartialFractions partial_fractions(const RationalFn& r, uint64_t seed) {
    PartialFractions out{Poly::zero(r.ctx()), {}};
    auto [quot, rem] = r.num().divmod(r.den());
    out.polynomial_part = quot;
    if (rem.is_zero()) return out;
    auto factors = factor(r.den(), seed);
    RationalFn proper(rem, r.den());
    for (const auto& pf : factors) {
        if (pf.factor.degree() != 1)
            throw NonSplitError(
                "denominator has a factor of degree " +
                std::to_string(pf.factor.degree()) +
                "; extend the field before decomposing");
        FieldElem pole = -pf.factor.coeff(0);
        auto [order, coeffs] = local_principal_part(proper, pole);
        if (order > 0) out.poles.push_back({pole, order, std::move(coeffs)});
    }
    return out;
}

RationalFn recompose(const PartialFractions& pf) {
    const auto& ctx = pf.polynomial_part.ctx();
    RationalFn acc = RationalFn::from_poly(pf.polynomial_part);
    for (const auto& pe : pf.poles) {
        Poly lin(ctx, {-pe.pole, ctx->one()});
        Poly pw = Poly::one(ctx);
        for (int k = 0; k < pe.order; ++k) {
            pw = pw * lin;
            acc = acc + RationalFn(Poly::constant(pe.coeffs[k]), pw);
        }
    }
    return acc;
}

int pole_order(const RationalFn& r, const FieldElem& a) {
    const auto& ctx = r.ctx();
    Poly den = r.den();
    Poly lin(ctx, {-a, ctx->one()});
    int m = 0;
    for (;;) {
        auto [q, rem] = den.divmod(lin);
        if (!rem.is_zero()) break;
        den = q;
        ++m;
    }
    return m;
}

FieldElem residue_at(const Differential& w, const FieldElem& a,
                     bool check_split, uint64_t seed) {
    if (!w.ctx()->same_field(*a.ctx()))
        throw FieldError("residue point lies in a different field");
    if (check_split) require_split_denominator(w.coefficient(), seed);
    auto [order, coeffs] = local_principal_part(w.coefficient(), a);
    if (order < 1) return w.ctx()->zero();
    return coeffs[0];
}

FieldElem residue_at_infinity(const Differential& w, uint64_t seed) {
    const auto& r = w.coefficient();
    FieldElem total = w.ctx()->zero();
    if (r.den().degree() == 0) return total;  // no finite poles
    auto factors = factor(r.den(), seed);
    for (const auto& pf : factors) {
        if (pf.factor.degree() != 1)
            throw NonSplitError("denominator does not split; cannot sum residues");
        FieldElem pole = -pf.factor.coeff(0);
        auto [order, coeffs] = local_principal_part(r, pole);
        if (order >= 1) total = total + coeffs[0];
    }
    return -total;
}

Differential cartier(const Differential& w) {
    const auto& ctx = w.ctx();
    const uint32_t p = ctx->characteristic();
    if (w.is_zero()) return w;
    const Poly& A = w.coefficient().num();
    const Poly& B = w.coefficient().den();
    // h = A * B^{p-1} / B^p
    Poly N = A;
    for (uint32_t i = 0; i + 1 < p; ++i) N = N * B;
    // bucket N by exponent mod p; reassemble to check the bucketing
    std::vector<Poly> buckets(p, Poly::zero(ctx));
    for (int e = 0; e <= N.degree(); ++e) {
        FieldElem c = N.coeff(static_cast<size_t>(e));
        if (c.is_zero()) continue;
        buckets[e % p] = buckets[e % p] + Poly::monomial(c, static_cast<size_t>(e));
    }
    Poly reassembled = Poly::zero(ctx);
    for (uint32_t i = 0; i < p; ++i) reassembled = reassembled + buckets[i];
    if (reassembled != N)
        throw std::logic_error("cartier: exponent bucketing failed");
    // top bucket has exponents == p-1 mod p; divide by x^{p-1}, take the
    // p-th root exponent-wise with coefficient inv_frobenius
    const Poly& top = buckets[p - 1];
    std::vector<FieldElem> root_coeffs;
    if (!top.is_zero())
        root_coeffs.assign(static_cast<size_t>(top.degree() / p) + 1,
                           ctx->zero());
    for (int e = 0; e <= top.degree(); ++e) {
        FieldElem c = top.coeff(static_cast<size_t>(e));
        if (c.is_zero()) continue;
        if (e % static_cast<int>(p) != static_cast<int>(p) - 1)
            throw std::logic_error("cartier: stray exponent in the top bucket");
        FieldElem rt = inv_frobenius(c);
        if (frobenius(rt) != c)
            throw std::logic_error("cartier: p-th root sanity check failed");
        root_coeffs[static_cast<size_t>(e / p)] = rt;
    }
    Poly C_top(ctx, std::move(root_coeffs));
    return Differential(RationalFn(C_top, B));
}

bool in_cartier_kernel(const Differential& w) { return cartier(w).is_zero(); }

}  // namespace tango
