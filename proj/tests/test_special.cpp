#include "doctest.h"

#include <cmath>

#include "support.hpp"
#include "swipt/errors.hpp"
#include "swipt/special.hpp"

using namespace swipt;

TEST_CASE("oracle self-check")
{
    CHECK(test::k1_oracle(1.0) == doctest::Approx(0.6019072301972346).epsilon(1e-15));
    CHECK(test::k1_oracle(10.0) == doctest::Approx(1.8648773453825584e-5).epsilon(1e-15));
    // The two series overlap near the switch point.
    for (double t : {20.0, 25.0, 30.0}) {
        const double a = static_cast<double>(test::k1_ascending(test::Big(t)));
        const double b = static_cast<double>(test::k1_asymptotic(test::Big(t)));
        CHECK(test::rel_diff(a, b) < 1e-14);
    }
}

TEST_CASE("bessel_k1 reference values")
{
    CHECK(bessel_k1(1.0) == doctest::Approx(0.6019072301972346).epsilon(1e-14));
    CHECK(bessel_k1(10.0) == doctest::Approx(1.8648773453825584e-5).epsilon(1e-14));
    CHECK(1e-6 * bessel_k1(1e-6) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("bessel_k1 against the oracle on a log grid")
{
    for (int i = 0; i < 50; ++i) {
        const double t = 1e-6 * std::pow(1e8, i / 49.0);
        INFO("t = " << t);
        CHECK(test::rel_diff(bessel_k1(t), test::k1_oracle(t)) < 1e-10);
    }
}

TEST_CASE("bessel_k1 domain and range")
{
    CHECK_THROWS_AS(bessel_k1(0.0), DomainError);
    CHECK_THROWS_AS(bessel_k1(-1.0), DomainError);
    CHECK_THROWS_AS(bessel_k1(NAN), DomainError);
    CHECK(bessel_k1(800.0) == 0.0);
    CHECK(std::isinf(bessel_k1(1e-320)));
}

TEST_CASE("psi_k1 and its complement")
{
    CHECK(psi_k1(0.0) == 1.0);
    CHECK(psi_k1(1e-13) == 1.0);
    CHECK(one_minus_psi_k1(0.0) == 0.0);
    CHECK(psi_k1(1000.0) == 0.0);
    for (double psi : {1e-8, 1e-5, 1e-3, 0.1, 0.5, 0.99, 1.0, 1.01, 2.0, 10.0}) {
        INFO("psi = " << psi);
        const test::Big b(psi);
        const double oracle = static_cast<double>(1 - b * test::k1_ascending(b));
        CHECK(test::rel_diff(one_minus_psi_k1(psi), oracle) < 1e-12);
        CHECK(psi_k1(psi) + one_minus_psi_k1(psi) == doctest::Approx(1.0).epsilon(1e-14));
    }
    // Monotone in psi.
    double prev = 0.0;
    for (double psi = 1e-6; psi < 50; psi *= 1.3) {
        const double v = one_minus_psi_k1(psi);
        CHECK(v >= prev);
        prev = v;
    }
}
