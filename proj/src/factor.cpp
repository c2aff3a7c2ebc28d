#include "tango/factor.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace tango {
namespace {

// multiplicity-tagged squarefree decomposition, characteristic-p aware
void squarefree_decomp(const Poly& f, int mult,
                       std::vector<std::pair<Poly, int>>& out) {
    if (f.degree() < 1) return;
    const uint32_t p = f.ctx()->characteristic();
    Poly fp = f.derivative();
    if (fp.is_zero()) {
        squarefree_decomp(poly_pth_root(f), mult * static_cast<int>(p), out);
        return;
    }
    Poly c = poly_gcd(f, fp);
    Poly w = f / c;
    int i = 1;
    while (!w.is_one()) {
        Poly y = poly_gcd(w, c);
        Poly z = w / y;
        if (!z.is_one()) out.emplace_back(z, mult * i);
        w = y;
        c = c / y;
        ++i;
    }
    if (!c.is_one())
        squarefree_decomp(poly_pth_root(c), mult * static_cast<int>(p), out);
}

// distinct-degree pieces of a squarefree monic f: (product, factor degree)
std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
    std::vector<std::pair<Poly, int>> pieces;
    const auto& ctx = f.ctx();
    const uint64_t q = ctx->size();
    Poly h = Poly::x(ctx) % f;
    int d = 0;
    while (f.degree() >= 2 * (d + 1)) {
        ++d;
        h = h.pow_mod(q, f);
        Poly g = poly_gcd(h - Poly::x(ctx), f);
        if (!g.is_one()) {
            pieces.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) pieces.emplace_back(f, f.degree());
    return pieces;
}

Poly random_poly(const FieldCtxPtr& ctx, int max_deg, std::mt19937_64& rng) {
    std::vector<FieldElem> c;
    std::uniform_int_distribution<uint64_t> dist(0, ctx->size() - 1);
    for (int i = 0; i <= max_deg; ++i) c.push_back(ctx->from_index(dist(rng)));
    return Poly(ctx, std::move(c));
}

// equal-degree splitting of a product of degree-d irreducibles (q odd).
// Uses the additive trace to F_q so exponents never exceed q.
void equal_degree(const Poly& f, int d, std::mt19937_64& rng,
                  std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const auto& ctx = f.ctx();
    const uint64_t q = ctx->size();
    for (;;) {
        Poly r = random_poly(ctx, f.degree() - 1, rng);
        if (r.is_zero()) continue;
        Poly g0 = poly_gcd(r, f);
        if (g0.degree() > 0 && g0.degree() < f.degree()) {
            equal_degree(g0, d, rng, out);
            equal_degree(f / g0, d, rng, out);
            return;
        }
        // trace of r down to F_q inside each residue field
        Poly tr = r % f;
        Poly pw = r % f;
        for (int i = 1; i < d; ++i) {
            pw = pw.pow_mod(q, f);
            tr = (tr + pw) % f;
        }
        Poly s = tr.pow_mod((q - 1) / 2, f);
        Poly g = poly_gcd(s - Poly::one(ctx), f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

std::vector<uint64_t> poly_key(const Poly& f) {
    std::vector<uint64_t> k;
    k.push_back(static_cast<uint64_t>(f.degree()));
    for (int i = f.degree(); i >= 0; --i)
        k.push_back(f.ctx()->index_of(f.coeff(static_cast<size_t>(i))));
    return k;
}

}  // namespace

std::vector<PolyFactor> factor(const Poly& f, uint64_t seed) {
    if (f.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
    std::vector<PolyFactor> result;
    if (f.degree() < 1) return result;
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Poly, int>> sq;
    squarefree_decomp(f.monic(), 1, sq);
    for (const auto& [part, mult] : sq) {
        for (const auto& [piece, d] : distinct_degree(part.monic())) {
            std::vector<Poly> irr;
            equal_degree(piece, d, rng, irr);
            for (auto& g : irr) result.push_back({std::move(g), mult});
        }
    }
    std::sort(result.begin(), result.end(),
              [](const PolyFactor& a, const PolyFactor& b) {
                  return poly_key(a.factor) < poly_key(b.factor);
              });
    return result;
}

std::vector<std::pair<FieldElem, int>> roots_in_field(const Poly& f,
                                                      uint64_t seed) {
    std::vector<std::pair<FieldElem, int>> roots;
    for (const auto& pf : factor(f, seed)) {
        if (pf.factor.degree() != 1) continue;
        roots.emplace_back(-pf.factor.coeff(0), pf.multiplicity);
    }
    std::sort(roots.begin(), roots.end(),
              [&](const auto& a, const auto& b) {
                  return f.ctx()->index_of(a.first) <
                         f.ctx()->index_of(b.first);
              });
    return roots;
}

bool splits_in_field(const Poly& f, uint64_t seed) {
    if (f.degree() < 1) return true;
    int total = 0;
    for (const auto& [root, mult] : roots_in_field(f, seed)) {
        (void)root;
        total += mult;
    }
    return total == f.degree();
}

SplittingRoots roots_in_splitting_field(const Poly& f, uint64_t seed,
                                        uint32_t degree_cap) {
    if (f.is_zero() || f.degree() < 1)
        throw std::domain_error(
            "splitting field requires a nonzero polynomial of degree >= 1");
    const auto& ctx = f.ctx();
    const uint32_t n = ctx->extension_degree();

    auto factors = factor(f, seed);
    uint64_t lcm_deg = 1;
    for (const auto& pf : factors)
        lcm_deg = std::lcm(lcm_deg,
                           static_cast<uint64_t>(pf.factor.degree()));
    uint64_t target_deg = lcm_deg * n;
    if (target_deg > degree_cap)
        throw FieldError("splitting field degree " +
                         std::to_string(target_deg) +
                         " exceeds the extension cap " +
                         std::to_string(degree_cap));

    if (target_deg == n) {
        return SplittingRoots{ctx, n, f, roots_in_field(f, seed), seed};
    }
    FieldCtxPtr big = field_create(ctx->characteristic(),
                                   static_cast<uint32_t>(target_deg),
                                   degree_cap);
    Embedding emb(ctx, big);
    std::vector<FieldElem> lifted_coeffs;
    for (int i = 0; i <= f.degree(); ++i)
        lifted_coeffs.push_back(emb(f.coeff(static_cast<size_t>(i))));
    SplittingRoots out{big,
                       static_cast<uint32_t>(target_deg),
                       Poly(big, std::move(lifted_coeffs)),
                       {},
                       seed};

    for (const auto& pf : factors) {
        std::vector<FieldElem> gc;
        for (int i = 0; i <= pf.factor.degree(); ++i)
            gc.push_back(emb(pf.factor.coeff(static_cast<size_t>(i))));
        Poly g(out.field, std::move(gc));
        auto rts = roots_in_field(g, seed);
        if (static_cast<int>(rts.size()) != g.degree())
            throw std::logic_error(
                "irreducible factor did not split in the splitting field "
                "(bug)");
        for (auto& [root, one] : rts) {
            (void)one;
            out.roots.emplace_back(root, pf.multiplicity);
        }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [&](const auto& a, const auto& b) {
                  return out.field->index_of(a.first) <
                         out.field->index_of(b.first);
              });
    int total = 0;
    for (const auto& [r, m] : out.roots) {
        (void)r;
        total += m;
    }
    if (total != f.degree())
        throw std::logic_error("root multiplicities do not sum to deg f (bug)");
    return out;
}

// Embedding lives here so it can use the root finder.
Embedding::Embedding(FieldCtxPtr source, FieldCtxPtr target)
    : src_(std::move(source)), dst_(std::move(target)), root_() {
    if (src_->characteristic() != dst_->characteristic())
        throw FieldError("embedding requires equal characteristic");
    if (dst_->extension_degree() % src_->extension_degree() != 0)
        throw FieldError("embedding requires source degree to divide target");
    if (src_->extension_degree() == dst_->extension_degree()) {
        root_ = dst_->gen();  // identity map
        return;
    }
    std::vector<FieldElem> mod_coeffs;
    for (uint32_t c : src_->modulus()) mod_coeffs.push_back(dst_->from_int(c));
    Poly m(dst_, std::move(mod_coeffs));
    auto rts = roots_in_field(m, kDefaultSeed);
    if (rts.empty()) throw FieldError("embedding root not found (bug)");
    root_ = rts.front().first;  // roots are sorted; smallest representation
}

}  // namespace tango
