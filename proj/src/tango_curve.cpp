#include "tango/tango_curve.hpp"

#include <numeric>

namespace tango {

std::vector<std::string> validate_spec(const TangoCurveSpec& s) {
    std::vector<std::string> v;
    if (s.a < 1 || s.b < 1) v.push_back("a and b must be positive");
    const int64_t order = static_cast<int64_t>(s.b) * s.p - 1;
    if (s.a >= 1 && std::gcd(static_cast<int64_t>(s.a), order) != 1)
        v.push_back("gcd(a, bp-1) = " +
                    std::to_string(std::gcd(static_cast<int64_t>(s.a), order)) +
                    " != 1");
    if (s.h.ctx()->characteristic() != s.p)
        v.push_back("h is defined over the wrong characteristic");
    if (s.h.degree() != static_cast<int64_t>(s.a) * s.p)
        v.push_back("deg h = " + std::to_string(s.h.degree()) + " != ap = " +
                    std::to_string(static_cast<int64_t>(s.a) * s.p));
    if (s.h.is_zero() || !s.h.leading().is_one())
        v.push_back("h must be monic");
    if (!s.h.is_zero() && s.h.degree() >= 1 && !gcd_with_derivative_is_one(s.h))
        v.push_back("gcd(h, h') != 1");
    if (!s.h.derivative(2).is_zero()) v.push_back("h'' != 0");
    return v;
}

CurveInvariants genus_superelliptic(int64_t n_exp, int64_t r_branch,
                                    uint32_t p) {
    if (n_exp < 2 || r_branch < 1)
        throw std::domain_error("superelliptic data requires n >= 2, r >= 1");
    if (n_exp % p == 0)
        throw std::domain_error("covering degree must be prime to p");
    int64_t d = std::gcd(n_exp, r_branch);
    int64_t twice = (n_exp - 1) * (r_branch - 1) - (d - 1);
    if (twice % 2 != 0)
        throw std::logic_error("genus formula produced an odd value (bug)");
    return CurveInvariants{twice / 2, d, n_exp, n_exp / d};
}

int64_t genus_tango_family(uint32_t p, uint64_t a, uint64_t b) {
    const int64_t ap = static_cast<int64_t>(a) * p;
    const int64_t bp = static_cast<int64_t>(b) * p;
    if ((ap - 1) * (bp - 2) % 2 != 0)
        throw std::logic_error("genus numerator is odd (bug)");
    int64_t g = (ap - 1) * (bp - 2) / 2;
    CurveInvariants inv = genus_superelliptic(bp - 1, ap, p);
    if (inv.genus != g)
        throw std::logic_error("genus formulas disagree (bug)");
    return g;
}

std::optional<int64_t> tango_degree(int64_t g, uint32_t p) {
    if (g < 2) throw std::domain_error("tango_degree requires genus >= 2");
    int64_t twice = 2 * g - 2;
    if (twice % static_cast<int64_t>(p) != 0) return std::nullopt;
    return twice / p;
}

int64_t moduli_dimension(uint32_t p, uint64_t a, uint64_t b) {
    int64_t g = genus_tango_family(p, a, b);
    int64_t twice = 2 * g - 2;
    if (twice % p != 0)
        throw std::logic_error("2g-2 not divisible by p on valid parameters");
    int64_t direct = twice + twice / p;
    int64_t P = p;
    int64_t A = static_cast<int64_t>(a), B = static_cast<int64_t>(b);
    int64_t expanded = A * B * P * P + (A * B - 2 * A - B) * P - 2 * A - B;
    if (direct != expanded)
        throw std::logic_error("dimension formulas disagree (bug)");
    return direct;
}

Poly mobius_transport(const Poly& h, const FieldElem& gamma) {
    const auto& ctx = h.ctx();
    FieldElem hg = h.eval(gamma);
    if (hg.is_zero())
        throw std::domain_error("mobius_transport requires h(gamma) != 0");
    const int d = h.degree();
    // x^d * h(1/x + gamma) = sum_k h_k (1 + gamma x)^k x^{d-k}
    Poly acc = Poly::zero(ctx);
    Poly base(ctx, {ctx->one(), gamma});  // 1 + gamma x
    Poly pw = Poly::one(ctx);
    std::vector<Poly> powers;
    powers.reserve(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        powers.push_back(pw);
        pw = pw * base;
    }
    for (int k = 0; k <= d; ++k) {
        FieldElem hk = h.coeff(static_cast<size_t>(k));
        if (hk.is_zero()) continue;
        acc = acc + Poly::monomial(hk, static_cast<size_t>(d - k)) * powers[static_cast<size_t>(k)];
    }
    Poly f = Poly::monomial(hg.inverse(), 1) * acc;
    if (f.degree() != d + 1 || !f.leading().is_one())
        throw std::logic_error("mobius transport lost monicity (bug)");
    return f;
}

namespace {

// smallest field element (enumeration order) that is not a root of h,
// extending the field when h vanishes on all of it
std::pair<FieldCtxPtr, FieldElem> smallest_nonroot(
    const Poly& h, const FieldCtxPtr& field, uint32_t degree_cap) {
    FieldCtxPtr work = field;
    Poly hw = h;
    for (;;) {
        const uint64_t limit =
            std::min<uint64_t>(work->size(),
                               static_cast<uint64_t>(hw.degree()) + 2);
        for (uint64_t k = 0; k < limit; ++k) {
            FieldElem g = work->from_index(k);
            if (!hw.eval(g).is_zero()) return {work, g};
        }
        // every element tried is a root; the field has at most deg h
        // elements, so grow it
        uint32_t next = work->extension_degree() * 2;
        if (next > degree_cap)
            throw FieldError("no non-root of h within the extension cap");
        FieldCtxPtr bigger =
            field_create(work->characteristic(), next, degree_cap);
        Embedding emb(work, bigger);
        std::vector<FieldElem> cs;
        for (int i = 0; i <= hw.degree(); ++i)
            cs.push_back(emb(hw.coeff(static_cast<size_t>(i))));
        hw = Poly(bigger, std::move(cs));
        work = bigger;
    }
}

}  // namespace

Certificate certify_tango(const TangoCurveSpec& s, uint64_t seed,
                          uint32_t degree_cap) {
    Certificate cert;
    cert.field = s.h.ctx();
    cert.seed = seed;
    cert.input = Json{{"p", s.p},
                      {"a", s.a},
                      {"b", s.b},
                      {"h", poly_to_json(s.h)},
                      {"curve", "y^(bp-1) = h(x)"}};

    auto violations = validate_spec(s);
    cert.steps.push_back({"validate_spec", violations.empty(),
                          Json{{"violations", violations}}});
    if (!violations.empty()) {
        cert.verdict = "NOT-CERTIFIED";
        return cert;
    }

    const int64_t R = static_cast<int64_t>(s.b) * s.p - 1;  // covering degree
    const int64_t ap = static_cast<int64_t>(s.a) * s.p;

    // (2) realize the branch points
    SplittingRoots sr = roots_in_splitting_field(s.h, seed, degree_cap);
    bool distinct = true;
    for (const auto& [root, mult] : sr.roots) {
        (void)root;
        if (mult != 1) distinct = false;
    }
    cert.steps.push_back(
        {"split_roots_distinct", distinct,
         Json{{"splitting_extension_degree", sr.extension_degree},
              {"root_count", sr.roots.size()}}});
    if (!distinct) {
        cert.verdict = "NOT-CERTIFIED";
        return cert;
    }

    // (3) transport by the smallest usable Mobius center and test the
    // second-derivative criterion on the transported polynomial
    auto [gamma_field, gamma] = smallest_nonroot(sr.lifted, sr.field, degree_cap);
    Poly h_gamma = sr.lifted;
    if (gamma_field != sr.field) {
        Embedding emb(sr.field, gamma_field);
        std::vector<FieldElem> cs;
        for (int i = 0; i <= sr.lifted.degree(); ++i)
            cs.push_back(emb(sr.lifted.coeff(static_cast<size_t>(i))));
        h_gamma = Poly(gamma_field, std::move(cs));
    }
    Poly f = mobius_transport(h_gamma, gamma);
    bool crit = criterion_second_derivative(f);
    cert.steps.push_back(
        {"mobius_second_derivative_criterion", crit,
         Json{{"gamma", elem_to_json(gamma)},
              {"gamma_field_degree", gamma_field->extension_degree()},
              {"transported_poly", poly_to_json(f)},
              {"criterion", crit}}});

    // (4) base connection d + (h'/h) dx on the branch points, expected
    // frame monodromy 1 everywhere
    std::vector<FieldElem> zs;
    for (const auto& [root, mult] : sr.roots) {
        (void)mult;
        zs.push_back(root);
    }
    Certificate base = certify_pretango(log_derivative_connection(zs), seed);
    cert.steps.push_back({"base_pretango", base.verdict == "PRE-TANGO",
                          base.to_json()});

    // (5) tame pullback through y^{bp-1} = h(x): every branch point (the ap
    // finite ones and the single point over infinity) has ramification
    // index bp-1, so frame monodromy 1 pulls back to bp-1 = -1 mod p
    uint64_t pulled = pullback_local(1, static_cast<uint64_t>(R), s.p);
    bool minus_one = pulled == s.p - 1;
    Json pull_witness = Json::array();
    for (const auto& zi : zs)
        pull_witness.push_back(Json{{"over", elem_to_json(zi)},
                                    {"ram_index", R},
                                    {"pulled_monodromy", pulled}});
    pull_witness.push_back(Json{{"over", "infinity"},
                                {"ram_index", R},
                                {"pulled_monodromy", pulled}});
    cert.steps.push_back(
        {"pullback_monodromy", minus_one,
         Json{{"ram_index", R},
              {"pulled_monodromy", pulled},
              {"expected", s.p - 1},
              {"points", pull_witness}}});

    // (6) all ap+1 upstairs points now carry monodromy -1 and leave the log
    // divisor; pure bookkeeping (no residue is mutated), recorded in full
    Json before = Json::array();
    for (const auto& zi : zs)
        before.push_back(Json{{"over", elem_to_json(zi)},
                              {"monodromy", s.p - 1}});
    before.push_back(Json{{"over", "infinity"}, {"monodromy", s.p - 1}});
    cert.steps.push_back({"drop_monodromy_minus_one_points", true,
                          Json{{"marked_before", before},
                               {"marked_after", Json::array()}}});

    // (7) numerics: genus, divisibility, degree, dimension.  2g-2 equals
    // p(abp - 2a - b) identically, so the division is always exact (the
    // genus-1 corner included, where the structure has degree 0).
    int64_t g = genus_tango_family(s.p, s.a, s.b);
    CurveInvariants inv = genus_superelliptic(R, ap, s.p);
    int64_t twice = 2 * g - 2;
    bool divisible = twice % static_cast<int64_t>(s.p) == 0;
    int64_t deg = divisible ? twice / s.p : 0;
    int64_t expected_deg = static_cast<int64_t>(s.a) * s.b * s.p -
                           2 * static_cast<int64_t>(s.a) -
                           static_cast<int64_t>(s.b);
    int64_t dim = moduli_dimension(s.p, s.a, s.b);
    bool numbers_ok = divisible && deg == expected_deg && inv.genus == g &&
                      inv.infinity_points == 1;
    cert.steps.push_back(
        {"degree_genus_bookkeeping", numbers_ok,
         Json{{"genus", g},
              {"infinity_points", inv.infinity_points},
              {"ram_index_infinity", inv.ram_index_infinity},
              {"tango_degree", deg},
              {"expected_degree", expected_deg},
              {"moduli_dimension", dim}}});

    cert.verdict = cert.all_steps_passed() ? "TANGO" : "NOT-CERTIFIED";
    cert.extra = Json{{"genus", g},
                      {"tango_degree", deg},
                      {"moduli_dimension", dim}};
    return cert;
}

TangoCurveSpec raynaud_family(uint32_t p, uint32_t l, const Poly& f_small) {
    if (static_cast<uint64_t>(l) * p < 4)
        throw std::domain_error("family requires lp >= 4");
    if (f_small.degree() != static_cast<int>(l) || !f_small.leading().is_one())
        throw std::domain_error("f must be monic of degree l");
    const auto& ctx = f_small.ctx();
    if (ctx->characteristic() != p)
        throw std::domain_error("f is defined over the wrong characteristic");
    // h = f(x^p) - x (plain exponent substitution, not a p-th power)
    std::vector<FieldElem> cs(static_cast<size_t>(l) * p + 1, ctx->zero());
    for (int i = 0; i <= f_small.degree(); ++i)
        cs[static_cast<size_t>(i) * p] = f_small.coeff(static_cast<size_t>(i));
    Poly h(ctx, std::move(cs));
    h = h - Poly::x(ctx);
    return TangoCurveSpec{p, l, l, h};
}

}  // namespace tango
