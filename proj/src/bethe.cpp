#include "tango/bethe.hpp"

#include <algorithm>
#include <stdexcept>

namespace tango {

void CartanDatum::validate() const {
    const size_t mm = m();
    for (const auto& row : pairing)
        if (row.size() != mm)
            throw std::domain_error("pairing matrix must be square");
    for (size_t j = 0; j < mm; ++j)
        if (pairing[j][j] != 2)
            throw std::domain_error("pairing diagonal entries must equal 2");
    if (!weight_pairing.empty() && weight_pairing.size() != mm)
        throw std::domain_error("weight pairing must have m rows");
    for (const auto& row : weight_pairing)
        if (row.size() != r())
            throw std::domain_error("weight pairing rows must have length r");
}

CartanDatum CartanDatum::sl2_simple(size_t m) {
    CartanDatum d;
    d.pairing.assign(m, std::vector<int64_t>(m, 2));
    d.weight_pairing.assign(m, std::vector<int64_t>{});
    return d;
}

void BetheInstance::validate() const {
    datum.validate();
    if (z.size() != datum.m())
        throw std::domain_error("z length must match the pairing size");
    if (x.size() != datum.r())
        throw std::domain_error("x length must match the weight data");
    for (size_t i = 0; i < z.size(); ++i)
        for (size_t j = i + 1; j < z.size(); ++j)
            if (z[i] == z[j]) throw std::domain_error("z points must be distinct");
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j)
            if (x[i] == x[j]) throw std::domain_error("x points must be distinct");
    for (const auto& zi : z)
        for (const auto& xi : x)
            if (zi == xi)
                throw std::domain_error("z and x points must be disjoint");
}

FieldElem bethe_residual(const BetheInstance& inst, size_t j) {
    if (j >= inst.z.size()) throw std::out_of_range("residual index");
    FieldElem acc = inst.ctx->zero();
    for (size_t i = 0; i < inst.x.size(); ++i) {
        FieldElem w = inst.ctx->from_int(inst.datum.weight_pairing[j][i]);
        acc = acc + w / (inst.z[j] - inst.x[i]);
    }
    for (size_t s = 0; s < inst.z.size(); ++s) {
        if (s == j) continue;
        FieldElem a = inst.ctx->from_int(inst.datum.pairing[j][s]);
        acc = acc - a / (inst.z[j] - inst.z[s]);
    }
    return acc;
}

bool is_solution(const BetheInstance& inst) {
    for (size_t j = 0; j < inst.z.size(); ++j)
        if (!bethe_residual(inst, j).is_zero()) return false;
    return true;
}

BetheInstance sl2_simple_instance(const std::vector<FieldElem>& z) {
    if (z.empty()) throw std::domain_error("need at least one point");
    BetheInstance inst{z.front().ctx(), {}, z, CartanDatum::sl2_simple(z.size())};
    inst.validate();
    return inst;
}

FieldElem simple_residual(const std::vector<FieldElem>& z, size_t j) {
    const auto& ctx = z.front().ctx();
    FieldElem acc = ctx->zero();
    for (size_t s = 0; s < z.size(); ++s) {
        if (s == j) continue;
        acc = acc + ctx->one() / (z[j] - z[s]);
    }
    return acc;
}

MasterPoly master_from_roots(const std::vector<FieldElem>& z) {
    if (z.empty()) throw std::domain_error("need at least one root");
    return MasterPoly{Poly::from_roots(z.front().ctx(), z), z};
}

bool criterion_second_derivative(const Poly& f) {
    const uint32_t p = f.ctx()->characteristic();
    if (f.degree() < 1 || !f.leading().is_one())
        throw std::domain_error("criterion requires a monic polynomial");
    if (static_cast<uint32_t>(f.degree() % p) != 1)
        throw std::domain_error("criterion requires degree = 1 mod p, got " +
                                std::to_string(f.degree()));
    return f.derivative(2).is_zero() && gcd_with_derivative_is_one(f);
}

bool per_point_identity_check(const Poly& f,
                              const std::vector<FieldElem>& z) {
    for (size_t i = 0; i < z.size(); ++i)
        for (size_t j = i + 1; j < z.size(); ++j)
            if (z[i] == z[j])
                throw std::domain_error("roots must be distinct");
    Poly d1 = f.derivative();
    Poly d2 = f.derivative(2);
    const auto& ctx = f.ctx();
    for (size_t j = 0; j < z.size(); ++j) {
        FieldElem lhs = d2.eval(z[j]);
        FieldElem rhs =
            ctx->from_int(2) * d1.eval(z[j]) * simple_residual(z, j);
        if (lhs != rhs) return false;
    }
    return true;
}

bool solution_criterion_equivalence(const std::vector<FieldElem>& z) {
    const uint32_t p = z.front().ctx()->characteristic();
    if (z.size() % p != 1)
        throw std::domain_error("point count must be 1 mod p");
    bool bethe = is_solution(sl2_simple_instance(z));
    bool crit = criterion_second_derivative(master_from_roots(z).f);
    if (bethe != crit)
        throw std::logic_error(
            "solution/criterion mismatch: the two routes disagree (bug)");
    return bethe;
}

std::vector<Poly> enumerate_master_polys(uint32_t p, uint32_t n, uint32_t l,
                                         bool require_split, uint64_t seed,
                                         uint64_t search_cap) {
    FieldCtxPtr ctx = field_create(p, n);
    const uint64_t deg = static_cast<uint64_t>(l) * p + 1;
    // admissible free exponents below deg: those = 0 or 1 mod p
    std::vector<uint64_t> slots;
    for (uint64_t e = 0; e < deg; ++e)
        if (e % p == 0 || e % p == 1) slots.push_back(e);
    const uint64_t q = ctx->size();
    unsigned __int128 space = 1;
    for (size_t i = 0; i < slots.size(); ++i) {
        space *= q;
        if (space > search_cap)
            throw std::domain_error(
                "enumeration space exceeds the configured cap");
    }
    std::vector<Poly> out;
    std::vector<uint64_t> odometer(slots.size(), 0);
    for (uint64_t counter = 0;; ++counter) {
        std::vector<FieldElem> coeffs(deg + 1, ctx->zero());
        coeffs[deg] = ctx->one();
        for (size_t i = 0; i < slots.size(); ++i)
            coeffs[slots[i]] = ctx->from_index(odometer[i]);
        Poly f(ctx, std::move(coeffs));
        // f'' = 0 holds by support; keep the distinct-root condition
        if (gcd_with_derivative_is_one(f)) {
            bool keep = true;
            if (require_split) {
                auto roots = roots_in_field(f, seed);
                int total = 0;
                for (const auto& [r, m] : roots) {
                    (void)r;
                    if (m != 1) keep = false;
                    total += m;
                }
                keep = keep && total == f.degree();
            }
            if (keep) out.push_back(std::move(f));
        }
        // advance odometer, least significant slot first
        size_t pos = 0;
        while (pos < slots.size()) {
            if (++odometer[pos] < q) break;
            odometer[pos] = 0;
            ++pos;
        }
        if (pos == slots.size()) break;
    }
    return out;
}

bool miura_sum_condition(const FieldCtxPtr& ctx,
                         const std::vector<FieldElem>& qs, uint64_t m) {
    FieldElem sum = ctx->zero();
    for (const auto& q : qs) {
        if (!q.in_prime_field())
            throw std::domain_error("scalars q_i must lie in the prime field");
        sum = sum + q;
    }
    FieldElem lhs = ctx->from_int(2) * ctx->from_int(static_cast<int64_t>(m % ctx->characteristic())) - sum;
    return lhs == ctx->from_int(2);
}

Differential build_miura_scalar(const std::vector<FieldElem>& xs,
                                const std::vector<FieldElem>& qs,
                                const std::vector<FieldElem>& zs) {
    if (xs.size() != qs.size())
        throw std::domain_error("one scalar q_i per marked point x_i");
    if (xs.empty() && zs.empty())
        throw std::domain_error("need at least one marked point");
    const auto& ctx = (xs.empty() ? zs : xs).front().ctx();
    if (!miura_sum_condition(ctx, qs, zs.size()))
        throw std::domain_error(
            "sum condition 2m - sum(q_i) = 2 (mod p) fails; no such "
            "connection exists");
    RationalFn acc = RationalFn::zero(ctx);
    for (size_t i = 0; i < xs.size(); ++i) {
        Poly lin(ctx, {-xs[i], ctx->one()});
        acc = acc + RationalFn(Poly::constant(qs[i] + ctx->one()), lin);
    }
    for (const auto& zj : zs) {
        Poly lin(ctx, {-zj, ctx->one()});
        acc = acc + RationalFn(Poly::from_ints(ctx, {2}), lin);
    }
    Differential w(acc);
    // residue bookkeeping: everything, infinity included, sums to zero
    FieldElem inf = residue_at_infinity(w);
    FieldElem finite = ctx->zero();
    for (const auto& xi : xs) finite = finite + residue_at(w, xi, false);
    for (const auto& zj : zs) finite = finite + residue_at(w, zj, false);
    if (!(inf + finite).is_zero())
        throw std::logic_error("residue theorem bookkeeping failed (bug)");
    return w;
}

}  // namespace tango
