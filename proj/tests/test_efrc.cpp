#include "doctest.h"

#include <cmath>
#include <random>

#include "support.hpp"
#include "swipt/analytic.hpp"
#include "swipt/efrc.hpp"

using namespace swipt;

namespace {

// (1 - exp(-a_N)) (1 - exp(-a_F)), a = d^alpha sigma^2 (2^2R - 1) / (lambda P_B).
double optimum_oracle(const SystemParams& p)
{
    const double g = std::exp2(2 * p.rate_R) - 1;
    const double aN = std::pow(p.d_BN, p.alpha) * p.sigma2_N * g / (p.lambda_BN * p.total_power_PB);
    const double aF = std::pow(p.d_BF, p.alpha) * p.sigma2_F * g / (p.lambda_BF * p.total_power_PB);
    return -std::expm1(-aN) * -std::expm1(-aF);
}

} // namespace

TEST_CASE("EFRC SOP at the optimum allocations")
{
    auto p = figure_defaults();
    p.power_ratio_k = 2.0;
    const double oracle = optimum_oracle(p);
    CHECK(oracle == doctest::Approx(-std::expm1(-1.875e-4) * -std::expm1(-3.675e-4)).epsilon(1e-12));
    CHECK(oracle == doctest::Approx(6.8887e-8).epsilon(1e-4));
    CHECK(efrc_sop_isanc(p) == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(efrc_sop_isaoc(figure_defaults()) == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(efrc_optimal_sop_closed_form(p) == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("EFRC CSANC is the probability N misses its own message")
{
    const auto p = figure_defaults();
    CHECK(efrc_sop_csanc(p) == doctest::Approx(-std::expm1(-625e-5 / 30)).epsilon(1e-12));
}

TEST_CASE("optimal ISANC allocation")
{
    auto p = figure_defaults();
    auto o = efrc_optimal_isanc(p);
    CHECK(o.k == 2.0);
    CHECK(o.sop == doctest::Approx(optimum_oracle(p)).epsilon(1e-12));
    p.rate_R = 2.0;
    o = efrc_optimal_isanc(p);
    CHECK(o.k == 4.0);
    CHECK(o.sop == doctest::Approx(optimum_oracle(p)).epsilon(1e-12));
}

TEST_CASE("optimal ISAOC allocation")
{
    const auto p = figure_defaults();
    const auto o = efrc_optimal_isaoc(p);
    CHECK(o.theta == 0.5);
    CHECK(o.rho == doctest::Approx(0.5));
    CHECK(o.sop == doctest::Approx(optimum_oracle(p)).epsilon(1e-12));
    CHECK(test::rel_diff(o.sop, efrc_optimal_isanc(p).sop) < 1e-12);
}

TEST_CASE("both optima coincide on random parameters")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        const auto p = test::random_params(rng);
        const double a = efrc_optimal_isanc(p).sop;
        const double b = efrc_optimal_isaoc(p).sop;
        CHECK(test::rel_diff(a, b) < 1e-12);
        CHECK(test::rel_diff(a, optimum_oracle(p)) < 1e-12);
    }
}

TEST_CASE("moving k away from 2^R hurts")
{
    auto p = figure_defaults();
    p.power_ratio_k = 2.0;
    const double best = efrc_sop_isanc(p);
    for (double k : {1.5, 1.9, 2.1, 3.0}) {
        p.power_ratio_k = k;
        CHECK(efrc_sop_isanc(p) > best);
    }
    p.power_ratio_k = 3.0;
    const double at3 = efrc_sop_isanc(p);
    p.power_ratio_k = 4.0;
    CHECK(efrc_sop_isanc(p) > at3);
    p.power_ratio_k = 1.5;
    const double at15 = efrc_sop_isanc(p);
    p.power_ratio_k = 1.2;
    CHECK(efrc_sop_isanc(p) > at15);
}

TEST_CASE("f(theta)")
{
    CHECK(efrc_f(0.5, 1.0) == doctest::Approx(3.0));
    for (int i = 50; i < 100; ++i) {
        // For th >= 1/2, 1 - th is exact and 1 - (1 - th) == th.
        const double th = i / 100.0;
        CHECK(efrc_f(th, 1.0) == efrc_f(1.0 - th, 1.0));
        CHECK(efrc_f(th, 1.3) == efrc_f(1.0 - th, 1.3));
        CHECK(efrc_f(th, 1.0) >= 3.0 - 1e-12);
    }
    // Convex: positive second differences.
    const double h = 1e-3;
    for (double th = 0.05; th < 0.95; th += 0.01) {
        const double d2 = efrc_f(th + h, 1.0) - 2 * efrc_f(th, 1.0) + efrc_f(th - h, 1.0);
        CHECK(d2 > 0.0);
    }
    // Balanced split equalizes the requirements.
    for (double th : {0.3, 0.5, 0.7}) {
        const double rho = efrc_balanced_rho(1.0, th);
        const double needF = th * (std::exp2(1.0 / th) - 1) / rho;
        const double needN = (1 - th) * (std::exp2(1.0 / (1 - th)) - 1) / (1 - rho);
        CHECK(needF == doctest::Approx(needN).epsilon(1e-12));
    }
}

TEST_CASE("error-free relaying never does worse than the full model")
{
    std::mt19937_64 rng(19);
    for (int i = 0; i < 8; ++i) {
        const auto p = i == 0 ? figure_defaults() : test::random_params(rng);
        CHECK(efrc_sop_csanc(p) <= outage_csanc(p).sop * (1 + 1e-12));
        CHECK(efrc_sop_isanc(p) <= outage_isanc(p).sop * (1 + 1e-12));
        CHECK(efrc_sop_isaoc(p) <= outage_isaoc(p).sop * (1 + 1e-12));
    }
}

TEST_CASE("invalid allocations")
{
    auto p = figure_defaults();
    p.power_ratio_k = 0.8;
    CHECK_THROWS_AS(efrc_sop_isanc(p), ValidationError);
    p = figure_defaults();
    p.power_fraction_rho = 1.0;
    CHECK_THROWS_AS(efrc_sop_isaoc(p), ValidationError);
}
