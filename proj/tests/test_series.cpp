#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <random>

#include "doctest.h"
#include "tango/connection.hpp"
#include "tango/series.hpp"

using namespace tango;

namespace {

TruncSeries random_series(const FieldCtxPtr& F, long low, long len,
                          std::mt19937_64& rng) {
    std::uniform_int_distribution<uint64_t> dist(0, F->size() - 1);
    std::vector<FieldElem> c;
    for (long i = 0; i < len; ++i) c.push_back(F->from_index(dist(rng)));
    return TruncSeries::from_coeffs(F, low, std::move(c));
}

// 2x2 matrices of truncated series, for the independent conjugation oracle
using Mat2 = std::array<TruncSeries, 4>;

Mat2 mat_mul(const Mat2& A, const Mat2& B) {
    return {A[0] * B[0] + A[1] * B[2], A[0] * B[1] + A[1] * B[3],
            A[2] * B[0] + A[3] * B[2], A[2] * B[1] + A[3] * B[3]};
}

Mat2 mat_add(const Mat2& A, const Mat2& B) {
    return {A[0] + B[0], A[1] + B[1], A[2] + B[2], A[3] + B[3]};
}

Mat2 mat_neg(const Mat2& A) { return {-A[0], -A[1], -A[2], -A[3]}; }

// gauge of d/dt + A by g = I + n, n = [[0, beta], [0, 0]]:
//   A  ->  g A g^{-1} - g' g^{-1},   g^{-1} = I - n,  n' n = 0
Mat2 conjugation_oracle(const Mat2& A, const TruncSeries& beta) {
    const auto& F = beta.ctx();
    long prec = std::min(beta.known_to(), A[0].known_to());
    TruncSeries zero = TruncSeries::zero(F, prec);
    TruncSeries one = TruncSeries::monomial(F->one(), 0, prec);
    Mat2 I{one, zero, zero, one};
    Mat2 n{zero, beta, zero, zero};
    Mat2 np{zero, beta.derivative(), zero, zero};
    Mat2 g = mat_add(I, n);
    Mat2 ginv = mat_add(I, mat_neg(n));
    return mat_add(mat_mul(mat_mul(g, A), ginv), mat_neg(np));
}

}  // namespace

TEST_CASE("series arithmetic tracks precision") {
    auto F5 = field_create(5, 1);
    auto a = TruncSeries::from_coeffs(
        F5, 0, {F5->from_int(1), F5->from_int(2), F5->from_int(3)});
    CHECK(a.known_to() == 3);
    CHECK(a.coeff(1) == F5->from_int(2));
    CHECK(a.coeff(-4).is_zero());  // exact zero below the window
    CHECK_THROWS_AS(a.coeff(3), SeriesPrecisionError);
    auto b = TruncSeries::monomial(F5->one(), -1, 3);
    auto s = a + b;
    CHECK(s.coeff(-1) == F5->one());
    CHECK(s.coeff(0) == F5->one());
    auto prod = a * b;  // valuation -1, precision min(3 + (-1), 3 + 0) = 2
    CHECK(prod.known_to() == 2);
    CHECK(prod.coeff(-1) == F5->from_int(1));
    CHECK(prod.coeff(0) == F5->from_int(2));
    // derivative drops known-order by one and kills t^{p-1} -> p t^{p-2}
    auto d = a.derivative();
    CHECK(d.known_to() == 2);
    CHECK(d.coeff(0) == F5->from_int(2));
}

TEST_CASE("series inverse") {
    auto F7 = field_create(7, 1);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        TruncSeries u = random_series(F7, 0, 12, rng);
        if (u.coeff(0).is_zero()) continue;
        auto inv = u.inverse();
        auto prod = u * inv;
        CHECK(prod.coeff(0) == F7->one());
        for (long e = 1; e < prod.known_to(); ++e)
            CHECK(prod.coeff(e).is_zero());
    }
    CHECK_THROWS_AS(TruncSeries::zero(F7, 5).inverse(), SeriesPrecisionError);
}

TEST_CASE("monomial substitution scales dlog residues by R") {
    // l dt/t pulled back through t = s^R is lR ds/s, for every l and R
    for (auto p : {3u, 5u, 7u}) {
        auto F = field_create(p, 1);
        for (uint64_t l = 0; l < p; ++l) {
            for (long R = 1; R <= 10; ++R) {
                TruncSeries coeff =
                    TruncSeries::monomial(F->from_int(static_cast<int64_t>(l)),
                                          -1, 6);
                TruncSeries pulled = coeff.substitute_monomial(R);
                // dt = R s^{R-1} ds
                TruncSeries jac = TruncSeries::monomial(F->from_int(R), R - 1,
                                                        6 * R);
                TruncSeries form = pulled * jac;
                FieldElem res = form.coeff(-1);
                CHECK(res == F->from_int(static_cast<int64_t>(l) * R));
                if (R % p != 0)
                    CHECK(res.prime_value() ==
                          pullback_local(l, static_cast<uint64_t>(R), p));
            }
        }
    }
}

TEST_CASE("disc connection shape") {
    auto F5 = field_create(5, 1);
    std::vector<FieldElem> uc(15, F5->zero());
    CHECK_NOTHROW(build_oper_disc(TruncSeries::from_coeffs(F5, 0, uc)));
    CHECK_THROWS_AS(
        build_oper_disc(TruncSeries::monomial(F5->one(), -1, 15)),
        std::domain_error);
}

TEST_CASE("gauge by the identity leaves the connection alone") {
    auto F5 = field_create(5, 1);
    std::mt19937_64 rng(7);
    TruncSeries u = random_series(F5, 0, 15, rng);
    auto conn = build_oper_disc(u);
    auto entries = gauge_by_upper(conn, TruncSeries::zero(F5, 15));
    TruncSeries expected =
        TruncSeries::monomial(F5->one(), -1, 15) + u;
    CHECK(entries.e11 == expected);
    CHECK(entries.e12.is_zero_within_precision());
    CHECK(entries.e21.coeff(0) == F5->one());
}

TEST_CASE("gauge by beta = -1/t at u = 0 reaches the plain oper form") {
    auto F5 = field_create(5, 1);
    auto conn = build_oper_disc(TruncSeries::zero(F5, 15));
    auto entries = gauge_by_upper(
        conn, TruncSeries::monomial(-F5->one(), -1, 15));
    // (1,1) = 1/t + 0 - 1/t = 0 and (1,2) = 2u/t = 0
    CHECK(entries.e11.is_zero_within_precision());
    CHECK(entries.e12.is_zero_within_precision());
    CHECK(entries.e21.coeff(0) == F5->one());
}

TEST_CASE("gauge matches the independent conjugation oracle") {
    std::mt19937_64 rng(11);
    for (auto p : {3u, 5u, 7u}) {
        auto F = field_create(p, 1);
        const long N = 3 * static_cast<long>(p);
        for (int i = 0; i < 100; ++i) {
            TruncSeries u = random_series(F, 0, N, rng);
            // beta with valuation >= -1
            TruncSeries beta = random_series(F, -1, N, rng);
            auto conn = build_oper_disc(u);
            auto entries = gauge_by_upper(conn, beta);
            TruncSeries inv_t = TruncSeries::monomial(F->one(), -1, N);
            TruncSeries a = inv_t + u;
            TruncSeries zero = TruncSeries::zero(F, N);
            TruncSeries one = TruncSeries::monomial(F->one(), 0, N);
            Mat2 A{a, zero, one, -a};
            Mat2 M = conjugation_oracle(A, beta);
            CHECK(entries.e11 == M[0]);
            CHECK(entries.e12 == M[1]);
            CHECK(entries.e21 == M[2]);
            CHECK(entries.e22 == M[3]);
        }
    }
}

TEST_CASE("extension to the disc succeeds exactly when u(0) = 0") {
    auto F5 = field_create(5, 1);
    SUBCASE("u = 0") {
        auto beta = extends_to_disc(build_oper_disc(TruncSeries::zero(F5, 15)));
        REQUIRE(beta.has_value());
        CHECK(beta->is_zero_within_precision());
    }
    SUBCASE("u = 1 is obstructed") {
        std::vector<FieldElem> uc(15, F5->zero());
        uc[0] = F5->one();
        CHECK(!extends_to_disc(build_oper_disc(
                                   TruncSeries::from_coeffs(F5, 0, uc)))
                   .has_value());
    }
    SUBCASE("u = t extends; the gauge is rechecked by substitution") {
        std::vector<FieldElem> uc(15, F5->zero());
        uc[1] = F5->one();
        TruncSeries u = TruncSeries::from_coeffs(F5, 0, uc);
        auto beta_plus = extends_to_disc(build_oper_disc(u));
        REQUIRE(beta_plus.has_value());
        TruncSeries beta =
            TruncSeries::monomial(-F5->one(), -1, 15) + *beta_plus;
        auto entries = gauge_by_upper(build_oper_disc(u), beta);
        CHECK(entries.e12.is_regular_within_precision());
    }
    SUBCASE("insufficient precision fails loudly") {
        CHECK_THROWS_AS(
            extends_to_disc(build_oper_disc(TruncSeries::zero(F5, 5))),
            SeriesPrecisionError);
    }
}

TEST_CASE("nilpotent residue dormancy scalar check") {
    auto F7 = field_create(7, 1);
    CHECK(nilpotent_monodromy_dormancy_check(F7->zero()));
    CHECK(!nilpotent_monodromy_dormancy_check(F7->one()));
    CHECK(!nilpotent_monodromy_dormancy_check(F7->from_int(3)));
}

TEST_CASE("dormant exponent scalar check") {
    auto F5 = field_create(5, 1);
    CHECK(dormant_exponent_check_sl2(F5->from_int(2)));
    CHECK(!dormant_exponent_check_sl2(F5->zero()));
    auto F9 = field_create(3, 2);
    CHECK(!dormant_exponent_check_sl2(F9->gen()));
    CHECK(dormant_exponent_check_sl2(F9->from_int(2)));
}
