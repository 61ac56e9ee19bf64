#include <doctest.h>

#include <cmath>
#include <numbers>

#include "census.hpp"
#include "expsums.hpp"

using namespace sqf;

namespace {

constexpr i64 kBudget = 1'000'000'000;

i64 naive_restricted(Family f, i64 h, i64 q1, i64 q2) {
    i64 count = 0;
    for (i64 x = 1; x <= h; ++x)
        for (i64 y = 1; y <= h; ++y)
            for (i64 z = 1; z <= h; ++z) {
                i64 v = x * x + y * y + poly_z(f, z);
                if ((v + 1) % q1 == 0 && (v + 2) % q2 == 0)
                    ++count;
            }
    return count;
}

} // namespace

TEST_CASE("square-free table") {
    SquarefreeTable t12(12);
    for (i64 n = 1; n <= 12; ++n) {
        bool expect = n != 4 && n != 8 && n != 9 && n != 12;
        CHECK(t12.squarefree(n) == expect);
    }
    CHECK(t12.squarefree(1));

    SquarefreeTable big(1'000'000);
    double density = static_cast<double>(big.count_squarefree()) / 1e6;
    CHECK(std::abs(density - 6.0 / (std::numbers::pi * std::numbers::pi)) < 1e-3);

    // sieve vs trial division on a fixed stride
    for (i64 n = 1; n <= 1'000'000; n += 7919)
        CHECK(big.squarefree(n) == is_squarefree_slow(n));
}

TEST_CASE("census reference values") {
    CHECK(gamma_count(Family::A, 1, kBudget) == 1); // 5 and 6 are square-free
    CHECK(gamma_count(Family::B, 1, kBudget) == 0); // 4 = 2^2
    CHECK(gamma_count(Family::A, 2, kBudget) == 1); // only (1,1,1) survives
}

TEST_CASE("census equals the naive triple loop") {
    for (Family f : {Family::A, Family::B}) {
        i64 prev = 0;
        for (i64 h = 1; h <= 12; ++h) {
            i64 fast = gamma_count(f, h, kBudget);
            i64 slow = gamma_count_naive(f, h);
            REQUIRE(fast == slow);
            REQUIRE(fast >= prev);
            REQUIRE(fast <= h * h * h);
            prev = fast;
        }
    }
}

TEST_CASE("census fills the report fields") {
    GammaCensus c = gamma_census(Family::A, 6, 0.25, kBudget);
    CHECK(c.count == gamma_count(Family::A, 6, kBudget));
    CHECK(c.main_term == doctest::Approx(0.25 * 216.0));
    CHECK(c.residual == doctest::Approx(static_cast<double>(c.count) - 0.25 * 216.0));
}

TEST_CASE("restricted counts by residue boxes") {
    CHECK(sigma_count(Family::A, 5, 1, 1, kBudget) == 125);
    CHECK(sigma_count(Family::A, 2, 2, 1, kBudget) == 4); // values 8, 8, 12, 12

    for (Family f : {Family::A, Family::B}) {
        for (auto [h, d1, d2] : {std::tuple<i64, i64, i64>{8, 2, 1},
                                 {8, 1, 2},
                                 {12, 3, 2},
                                 {20, 2, 3},  // h above the modulus: box weights
                                 {20, 1, 1},
                                 {9, 5, 2},
                                 {25, 2, 1}}) {
            i64 got = sigma_count(f, h, d1, d2, kBudget);
            i64 want = naive_restricted(f, h, d1 * d1, d2 * d2);
            REQUIRE(got == want);
        }
        // raw (non-squared) moduli path used by the decomposition identity
        for (auto [h, q1, q2] : {std::tuple<i64, i64, i64>{7, 3, 1}, {6, 3, 2}, {30, 5, 3}})
            REQUIRE(restricted_count(f, h, q1, q2, kBudget) == naive_restricted(f, h, q1, q2));
    }

    CHECK_THROWS_AS(restricted_count(Family::A, 5, 4, 6, kBudget), error); // not coprime
}

TEST_CASE("residue box counts match their exponential form") {
    // #{1 <= v <= h : v == r (q)} = h/q + (1/q) sum_{t=1}^{q-1} e(-rt/q) g(t)
    // with g(t) the finite geometric sum over h terms
    for (i64 q : {2, 5, 12}) {
        for (i64 h : {7, 23}) {
            for (i64 r = 0; r < q; ++r) {
                cplx total = static_cast<double>(h) / static_cast<double>(q);
                for (i64 t = 1; t < q; ++t) {
                    cplx g = geometric_sum(static_cast<double>(t) / static_cast<double>(q), 0, h);
                    total += Phase(-r * t, q).value() * g / static_cast<double>(q);
                }
                CHECK(std::abs(total.imag()) < 1e-9);
                CHECK(residue_box_count(h, q, r) == doctest::Approx(total.real()).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("exponential-sum decomposition identity") {
    DecompositionCheck trivial = sigma_decomposition_check(Family::A, 5, 1, 1, kBudget);
    CHECK(trivial.count == 125);
    CHECK(trivial.lhs == doctest::Approx(125.0));
    CHECK(std::abs(trivial.rhs - cplx(125.0, 0.0)) < 1e-9);
    CHECK(trivial.relative_deviation < 1e-12);

    DecompositionCheck a = sigma_decomposition_check(Family::A, 7, 3, 1, kBudget);
    CHECK(a.relative_deviation < 1e-5);

    DecompositionCheck b = sigma_decomposition_check(Family::B, 6, 3, 2, kBudget);
    CHECK(b.relative_deviation < 1e-5);

    DecompositionCheck wide = sigma_decomposition_check(Family::B, 13, 5, 2, kBudget);
    CHECK(wide.relative_deviation < 1e-5);

    CHECK_THROWS_AS(sigma_decomposition_check(Family::A, 5, 6, 4, kBudget), error);
}

TEST_CASE("mobius identity is exact") {
    for (Family f : {Family::A, Family::B}) {
        for (i64 h : {1, 2, 7, 12}) {
            MobiusCheck check = mobius_identity_check(f, h, kBudget);
            REQUIRE(check.exact);
            REQUIRE(check.census == check.expansion);
            CHECK(check.pairs > 0);
        }
    }
    MobiusCheck a1 = mobius_identity_check(Family::A, 1, kBudget);
    CHECK(a1.census == 1);
}

TEST_CASE("residual fit") {
    // synthetic exact power law: residual = h^2
    std::vector<std::pair<double, double>> pts;
    for (i64 h : {10, 20, 40, 80})
        pts.emplace_back(std::log(static_cast<double>(h)), std::log(static_cast<double>(h * h)));
    CHECK(fit_log_slope(pts) == doctest::Approx(2.0).epsilon(1e-9));

    std::vector<std::pair<double, double>> two(pts.begin(), pts.begin() + 2);
    CHECK_THROWS_AS(fit_log_slope(two), error);
    try {
        fit_log_slope(two);
    } catch (const error& e) {
        CHECK(e.code() == errc::degenerate_fit);
    }

    std::vector<i64> bad{50, 40, 60, 70};
    CHECK_THROWS_AS(residual_exponent_fit(Family::A, bad, 0.3, kBudget), error);
    std::vector<i64> short_list{10, 20, 30};
    CHECK_THROWS_AS(residual_exponent_fit(Family::A, short_list, 0.3, kBudget), error);

    // end-to-end on a small grid: slope lands near the synthetic residual
    // growth because sigma_ref = 0 makes residual = count ~ sigma h^3
    std::vector<i64> hs{10, 15, 20, 25};
    FitReport r = residual_exponent_fit(Family::B, hs, 0.0, kBudget);
    CHECK(r.usable_points == 4);
    CHECK(r.slope == doctest::Approx(3.0).epsilon(0.1));
    CHECK(r.theorem_exponent == doctest::Approx(2.5));
}
