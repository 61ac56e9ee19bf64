#include <doctest.h>

#include <cmath>
#include <numbers>

#include "expsums.hpp"

using namespace sqf;

namespace {

// reference evaluation straight from the definition, no index reuse
cplx naive_gauss(i64 q, i64 m, i64 n) {
    cplx s = 0.0;
    for (i64 x = 1; x <= q; ++x)
        s += std::polar(1.0, 2.0 * std::numbers::pi *
                                 (static_cast<double>(m) * x * x + static_cast<double>(n) * x) /
                                 static_cast<double>(q));
    return s;
}

} // namespace

TEST_CASE("rational phases stay reduced") {
    CHECK(Phase(-1, 3).numerator == 2);
    CHECK(Phase(7, 3).numerator == 1);
    CHECK(Phase(0, 1).value() == cplx(1.0, 0.0));
    CHECK(std::abs(Phase(-1, 3).value() - std::conj(Phase(1, 3).value())) < 1e-15);
    for (i64 q : {2, 5, 12})
        for (i64 k : {-9, -1, 0, 4, 31})
            CHECK(std::abs(Phase(k, q).value() - Phase(k + 3 * q, q).value()) < 1e-12);
    CHECK(std::abs(Phase(1, 4).conj().value() - cplx(0.0, -1.0)) < 1e-12);
    CHECK_THROWS_AS(Phase(1, 0), error);
}

TEST_CASE("gauss sum reference values") {
    CHECK(std::abs(gauss_sum(1, 5, 3) - cplx(1.0, 0.0)) < 1e-12);
    for (i64 q : {1, 2, 5, 12})
        CHECK(std::abs(gauss_sum(q, 0, 0) - cplx(static_cast<double>(q), 0.0)) < 1e-12);

    cplx g3 = gauss_sum(3, 1, 0);
    CHECK(g3.real() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(g3.imag() == doctest::Approx(std::sqrt(3.0)));

    cplx g5 = gauss_sum(5, 1, 0);
    CHECK(g5.real() == doctest::Approx(std::sqrt(5.0)));
    CHECK(g5.imag() == doctest::Approx(0.0).epsilon(1e-12));

    // square law at 7: G(7,1)^2 = -7 since 7 == 3 (mod 4)
    cplx g7 = gauss_sum(7, 1, 0);
    CHECK(std::abs(g7 * g7 - cplx(-7.0, 0.0)) < 1e-9);

    // gcd reduction with d = (9, 3) = 3 not dividing n = 1: the sum cancels
    CHECK(std::abs(gauss_sum(9, 3, 1)) < 1e-12);

    // negative and oversized arguments reduce mod q
    for (i64 q : {3, 7, 10})
        for (i64 m : {-2, 1, 15})
            for (i64 n : {-7, 0, 23})
                CHECK(std::abs(gauss_sum(q, m, n) - naive_gauss(q, m, n)) < 1e-9);
}

TEST_CASE("salie sum reference values") {
    CHECK(std::abs(salie_sum(1, 4, 9) - cplx(1.0, 0.0)) < 1e-12);

    cplx s3 = salie_sum(3, 1, 1); // e(2/3) - e(1/3)
    CHECK(s3.real() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(s3.imag() == doctest::Approx(-std::sqrt(3.0)));

    cplx s15 = salie_sum(15, 1, 2);
    CHECK(std::abs(s15) <= 4.0 * std::sqrt(15.0) + 1e-9); // 2^omega(15) sqrt(15)

    CHECK_THROWS_AS(salie_sum(4, 1, 1), error);
    try {
        salie_sum(4, 1, 1);
    } catch (const error& e) {
        CHECK(e.code() == errc::even_modulus);
    }
}

TEST_CASE("kloosterman sum reference values") {
    for (i64 q : {1, 2, 6, 9, 10}) {
        i64 phi = factorize(q).phi();
        CHECK(std::abs(kloosterman_sum(q, 0, 0) - cplx(static_cast<double>(phi), 0.0)) < 1e-12);
    }
    CHECK(kloosterman_sum(3, 1, 1).real() == doctest::Approx(-1.0));
    CHECK(kloosterman_sum(5, 1, 1).real() ==
          doctest::Approx(2.0 + 2.0 * std::cos(4.0 * std::numbers::pi / 5.0)));

    // conjugation symmetry x -> q - x makes the sum real
    for (i64 q = 1; q <= 40; ++q)
        for (i64 m : {0, 1, 3})
            for (i64 n : {0, 2, 5})
                CHECK(std::abs(kloosterman_sum(q, m, n).imag()) < 1e-9);
}

TEST_CASE("geometric sum") {
    CHECK(std::abs(geometric_sum(0.0, 0, 10) - cplx(10.0, 0.0)) < 1e-12);
    CHECK(std::abs(geometric_sum(0.5, 0, 2)) < 1e-12);          // e(1/2) + e(1) = 0
    CHECK(std::abs(geometric_sum(1.0 / 3.0, 0, 3)) < 1e-12);    // full period
    CHECK_THROWS_AS(geometric_sum(0.1, 5, 5), error);
    CHECK_THROWS_AS(geometric_sum(0.1, 7, 3), error);

    // matches the closed ratio form away from integer xi
    for (double xi : {0.1, 0.23, 0.4}) {
        for (i64 len : {1, 2, 7, 40}) {
            cplx direct = geometric_sum(xi, 0, len);
            double angle = std::numbers::pi * xi;
            double expected_mag = std::abs(std::sin(angle * static_cast<double>(len)) / std::sin(angle));
            CHECK(std::abs(direct) == doctest::Approx(expected_mag).epsilon(1e-9));
        }
    }
}

TEST_CASE("gauss identity sweep at reduced range") {
    Sweep sweep = verify_gauss_identities(60, 0);
    CHECK(sweep.failures.empty());
    CHECK(sweep.cases > 100000);
    CHECK(sweep.max_deviation < 1e-8);
}

TEST_CASE("gauss table matches scalar evaluation") {
    for (i64 q : {1, 2, 9, 14}) {
        GaussTable table(q);
        for (i64 m = 0; m < q; ++m)
            for (i64 n = 0; n < q; ++n)
                CHECK(std::abs(table.at(m, n) - gauss_sum(q, m, n)) < 1e-10);
    }
}

TEST_CASE("salie and kloosterman bound sweeps at reduced range") {
    Sweep salie = verify_salie_bound(61, 0);
    CHECK(salie.failures.empty());
    CHECK(salie.max_deviation <= 1.0 + 1e-9); // ratio |S| / bound

    Sweep weil = verify_kloosterman_bound(40, 0);
    CHECK(weil.failures.empty());
    CHECK(weil.max_deviation <= 1.0 + 1e-9);
}

TEST_CASE("geometric bound sweep") {
    Sweep sweep = verify_geometric_bound(0.05, 97, {1, 2, 5, 10, 100, 1000});
    CHECK(sweep.failures.empty());
    CHECK(sweep.cases > 1000);
}
