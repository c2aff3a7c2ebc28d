#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "tango/connection.hpp"

using namespace tango;

namespace {

Poly random_poly(const FieldCtxPtr& F, int max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<uint64_t> dist(0, F->size() - 1);
    std::uniform_int_distribution<int> ddist(0, max_deg);
    int d = ddist(rng);
    std::vector<FieldElem> c;
    for (int i = 0; i <= d; ++i) c.push_back(F->from_index(dist(rng)));
    return Poly(F, std::move(c));
}

std::vector<FieldElem> distinct_points(const FieldCtxPtr& F, int count,
                                       std::mt19937_64& rng) {
    std::uniform_int_distribution<uint64_t> dist(0, F->size() - 1);
    std::vector<FieldElem> pts;
    while (static_cast<int>(pts.size()) < count) {
        FieldElem c = F->from_index(dist(rng));
        bool dup = false;
        for (const auto& q : pts) dup = dup || q == c;
        if (!dup) pts.push_back(c);
    }
    return pts;
}

}  // namespace

TEST_CASE("p-curvature closed form on the worked examples") {
    auto F3 = field_create(3, 1);
    // f = x, p = 3: psi = x^3
    Differential w(RationalFn::from_poly(Poly::x(F3)));
    RationalFn expect = RationalFn::from_poly(
        Poly::from_ints(F3, {0, 0, 0, 1}));
    CHECK(p_curvature_rank1(w) == expect);
    CHECK(p_curvature_oracle(w) == expect);
    // f = 1/(x-a): the (p-1)st derivative cancels f^p
    auto F5 = field_create(5, 1);
    Differential ws(RationalFn(Poly::one(F5), Poly::from_ints(F5, {-2, 1})));
    CHECK(p_curvature_rank1(ws).is_zero());
    CHECK(p_curvature_oracle(ws).is_zero());
    // constants: psi = c^p (= c over the prime field)
    Differential wc(RationalFn::from_poly(Poly::from_ints(F5, {3})));
    CHECK(p_curvature_rank1(wc) ==
          RationalFn::from_poly(Poly::from_ints(F5, {3})));
    // f = 0
    CHECK(p_curvature_oracle(Differential::zero(F5)).is_zero());
}

TEST_CASE("closed form matches the operator oracle on random forms") {
    std::mt19937_64 rng(17);
    for (auto p : {3u, 5u, 7u}) {
        auto F = field_create(p, 1);
        for (int i = 0; i < 30; ++i) {
            Poly num = random_poly(F, 3, rng);
            Poly den = random_poly(F, 3, rng);
            if (den.is_zero()) continue;
            Differential w(RationalFn(num, den));
            CHECK(p_curvature_rank1(w) == p_curvature_oracle(w));
        }
    }
    CHECK_THROWS_AS(
        p_curvature_oracle(Differential::zero(field_create(17, 1))),
        std::domain_error);
}

TEST_CASE("logarithmic derivatives are dormant") {
    std::mt19937_64 rng(19);
    auto F7 = field_create(7, 1);
    for (int i = 0; i < 20; ++i) {
        auto pts = distinct_points(F7, 2 + static_cast<int>(rng() % 4), rng);
        Differential w(dlog(Poly::from_roots(F7, pts)));
        CHECK(p_curvature_rank1(w).is_zero());
    }
}

TEST_CASE("frame monodromy is the dx-frame residue") {
    auto F5 = field_create(5, 1);
    // term 4/(x-z): monodromy 4
    FieldElem z = F5->from_int(2);
    Differential w(RationalFn(Poly::from_ints(F5, {4}),
                              Poly::from_ints(F5, {-2, 1})));
    RankOneLogConn c(w, {{z, F5->from_int(4)}});
    CHECK(frame_monodromy(c, z) == F5->from_int(4));
    CHECK_THROWS_AS(frame_monodromy(c, F5->from_int(0)), std::domain_error);
}

TEST_CASE("non-prime-field residue is a monodromy error") {
    auto F9 = field_create(3, 2);
    FieldElem t = F9->gen();
    FieldElem z = F9->zero();
    Differential w(RationalFn(Poly::constant(t), Poly::x(F9)));
    RankOneLogConn c(w, {{z, F9->one()}});
    CHECK_THROWS_AS(frame_monodromy(c, z), MonodromyError);
}

TEST_CASE("marked-point invariants") {
    auto F5 = field_create(5, 1);
    Differential w(RationalFn(Poly::one(F5),
                              Poly::from_ints(F5, {0, 0, 1})));  // 1/x^2
    // order-2 pole with nonzero... residue of 1/x^2 at 0 is 0, so allowed
    CHECK_NOTHROW(RankOneLogConn(w, {{F5->zero(), F5->zero()}}));
    // order-2 pole with nonzero residue: (1+x)/x^2 has residue 1 at 0
    Differential wb(RationalFn(Poly::from_ints(F5, {1, 1}),
                               Poly::from_ints(F5, {0, 0, 1})));
    CHECK_THROWS_AS(RankOneLogConn(wb, {{F5->zero(), F5->zero()}}),
                    std::domain_error);
    // duplicated marked points
    Differential wl(dlog(Poly::x(F5)));
    CHECK_THROWS_AS(
        RankOneLogConn(wl, {{F5->zero(), F5->one()}, {F5->zero(), F5->one()}}),
        std::domain_error);
    // expected monodromy outside F_p
    auto F9 = field_create(3, 2);
    Differential w9(dlog(Poly::x(F9)));
    CHECK_THROWS_AS(RankOneLogConn(w9, {{F9->zero(), F9->gen()}}),
                    MonodromyError);
}

TEST_CASE("pretango_from_points shape constraints") {
    auto F5 = field_create(5, 1);
    // single point: l = 0, empty residual system
    auto c = pretango_from_points({F5->from_int(0)});
    CHECK(c.omega().coefficient() == dlog(Poly::x(F5)));
    CHECK(frame_monodromy(c, F5->from_int(0)) == F5->one());
    // |z| must be 1 mod p
    CHECK_THROWS_AS(pretango_from_points({F5->zero(), F5->one()}),
                    std::domain_error);
    // repeated points
    CHECK_THROWS_AS(pretango_from_points(
                        {F5->zero(), F5->zero(), F5->one(), F5->from_int(2),
                         F5->from_int(3), F5->from_int(4)}),
                    std::domain_error);
}

TEST_CASE("certify_pretango on the monodromy-1 family") {
    auto F5 = field_create(5, 1);
    SUBCASE("roots of x^6+x+1: the full chain passes") {
        Poly f = Poly::from_ints(F5, {1, 1, 0, 0, 0, 0, 1});
        auto sr = roots_in_splitting_field(f);
        std::vector<FieldElem> zs;
        for (const auto& [r, m] : sr.roots) {
            CHECK(m == 1);
            zs.push_back(r);
        }
        Certificate cert = certify_pretango(pretango_from_points(zs));
        CHECK(cert.verdict == "PRE-TANGO");
        CHECK(cert.all_steps_passed());
        REQUIRE(cert.steps.size() == 3);
        CHECK(cert.steps[2].name == "cartier_kernel");
        // the literal dx/f reading is recorded and (as always) fails
        CHECK(cert.steps[2].witness["literal_in_kernel"] == false);
        CHECK(cert.steps[2].witness["in_kernel"] == true);
    }
    SUBCASE("z = (0,1): fails exactly at the kernel step") {
        Certificate cert = certify_pretango(
            log_derivative_connection({F5->zero(), F5->one()}));
        CHECK(cert.verdict == "NOT-PRE-TANGO");
        REQUIRE(cert.steps.size() == 3);
        CHECK(cert.steps[0].passed);   // log-derivative family is dormant
        CHECK(cert.steps[1].passed);   // residues are 1
        CHECK(!cert.steps[2].passed);  // f'' = 2 obstructs
    }
    SUBCASE("single marked point: adopted reading matches the l = 0 case") {
        Certificate cert =
            certify_pretango(pretango_from_points({F5->from_int(3)}));
        CHECK(cert.verdict == "PRE-TANGO");
        // both conventions recorded; only the adopted one is consistent here
        CHECK(cert.steps[2].witness["in_kernel"] == true);
        CHECK(cert.steps[2].witness["literal_in_kernel"] == false);
    }
    SUBCASE("input outside the log-derivative family is rejected") {
        Differential w(RationalFn(Poly::from_ints(F5, {2}),
                                  Poly::from_ints(F5, {0, 1})));
        RankOneLogConn c(w, {{F5->zero(), F5->from_int(2)}});
        CHECK_THROWS_AS(certify_pretango(c), std::domain_error);
    }
}

TEST_CASE("certificate JSON carries field, seed, steps, verdict") {
    auto F5 = field_create(5, 1);
    Certificate cert =
        certify_pretango(pretango_from_points({F5->from_int(1)}), 99);
    Json j = cert.to_json();
    CHECK(j["tool_version"] == kToolVersion);
    CHECK(j["field"]["p"] == 5);
    CHECK(j["seed"] == 99);
    CHECK(j["verdict"] == "PRE-TANGO");
    CHECK(j["steps"].size() == 3);
}

TEST_CASE("tame local pullback of monodromy") {
    // (1, bp-1) with p = 5, b = 1: 4 = -1 mod 5
    CHECK(pullback_local(1, 4, 5) == 4);
    CHECK(pullback_local(2, 3, 7) == 6);
    for (uint64_t l = 0; l < 7; ++l) CHECK(pullback_local(l, 1, 7) == l);
    CHECK_THROWS_AS(pullback_local(1, 10, 5), std::domain_error);
    CHECK_THROWS_AS(pullback_local(1, 0, 5), std::domain_error);
}
