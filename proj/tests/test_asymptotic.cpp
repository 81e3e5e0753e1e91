#include "doctest.h"

#include <cmath>
#include <vector>

#include "support.hpp"
#include "swipt/analytic.hpp"
#include "swipt/asymptotic.hpp"

using namespace swipt;

namespace {

std::vector<std::pair<double, double>> term_pairs(const EventProbs& exact, const EventProbs& asym)
{
    return {{exact.ndf0, asym.ndf0},
            {exact.fdf0, asym.fdf0},
            {exact.ndn0, asym.ndn0},
            {exact.fdn0, asym.fdn0},
            {exact.ndf1_ndn0, asym.ndf1_ndn0},
            {exact.fdf1_fdn0, asym.fdf1_fdn0},
            {exact.n_not_full(), 1.0 - asym.n_full},
            {exact.f_not_full(), 1.0 - asym.f_full},
            {exact.nhf_fail, asym.nhf_fail},
            {exact.fhn_fail_ndf0, asym.fhn_fail_ndf0},
            {exact.fhn_fail_ndf1, asym.fhn_fail_ndf1},
            {exact.fhn_fail, asym.fhn_fail}};
}

SystemParams at_dbm(double dbm)
{
    auto p = figure_defaults();
    p.total_power_PB = dbm_to_mw(dbm);
    return p;
}

} // namespace

TEST_CASE("leading coefficients")
{
    for (double pb : {100.0, 1e4, 1e6}) {
        auto p = figure_defaults();
        p.total_power_PB = pb;
        CHECK(highsnr_noma_event_probs(p).ndf0 == doctest::Approx(1.5625e-2 / pb).epsilon(1e-12));
        CHECK(highsnr_ofdma_event_probs(p).ndn0 == doctest::Approx(1.875e-2 / pb).epsilon(1e-12));
    }
}

TEST_CASE("terms that vanish for k <= 2^R")
{
    auto p = at_dbm(60);
    p.power_ratio_k = 2.0;
    const auto a = highsnr_noma_event_probs(p);
    CHECK(a.ndf1_ndn0 == 0.0);
    CHECK(a.fdf1_fdn0 == 0.0);
    CHECK(a.fhn_fail_ndf1 == 0.0);
}

TEST_CASE("exact / asymptotic ratios")
{
    const auto p60 = at_dbm(60);
    CHECK(noma_event_probs(p60).ndf0 / highsnr_noma_event_probs(p60).ndf0 == doctest::Approx(1.0).epsilon(0.01));

    const auto p70 = at_dbm(70);
    const auto e = ofdma_event_probs(p70);
    const auto a = highsnr_ofdma_event_probs(p70);
    CHECK(e.nhf_fail / a.nhf_fail == doctest::Approx(1.0).epsilon(0.05));
    CHECK(e.fhn_fail / a.fhn_fail == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("ratios approach 1 over the last decade")
{
    for (double k : {7.0 / 3.0, 1.6}) {
        std::vector<std::vector<std::pair<double, double>>> noma, ofdma;
        for (double dbm : {60.0, 65.0, 70.0}) {
            auto p = at_dbm(dbm);
            p.power_ratio_k = k;
            p.power_fraction_rho = k == 1.6 ? 0.6 : 0.5;
            noma.push_back(term_pairs(noma_event_probs(p), highsnr_noma_event_probs(p)));
            ofdma.push_back(term_pairs(ofdma_event_probs(p), highsnr_ofdma_event_probs(p)));
        }
        for (const auto* set : {&noma, &ofdma}) {
            for (std::size_t t = 0; t < (*set)[0].size(); ++t) {
                INFO("k = " << k << " term " << t);
                double prev = INFINITY;
                for (const auto& level : *set) {
                    const auto [exact, asym] = level[t];
                    if (exact == 0.0 && asym == 0.0) continue;
                    const double dev = std::abs(exact / asym - 1.0);
                    CHECK(dev <= prev + 1e-6); // slack for rounding in 1 - n_full
                    prev = dev;
                }
                if (std::isfinite(prev)) CHECK(prev < 0.05);
            }
        }
    }
}

TEST_CASE("diversity slopes")
{
    std::vector<double> grid;
    for (double d = 40; d <= 70; d += 5) grid.push_back(d);
    const auto p = figure_defaults();
    const auto cs = diversity_slope(Protocol::Csanc, p, grid);
    CHECK(cs.sys >= 0.85);
    CHECK(cs.sys <= 1.1);
    CHECK(cs.N == doctest::Approx(1.0).epsilon(0.02));
    for (auto proto : {Protocol::Isanc, Protocol::Isaoc}) {
        const auto s = diversity_slope(proto, p, grid);
        CHECK(s.sys >= 1.8);
        CHECK(s.sys <= 2.1);
        CHECK(s.N >= 1.8);
        CHECK(s.F >= 1.8);
    }
}

TEST_CASE("diversity slope errors")
{
    const auto p = figure_defaults();
    CHECK_THROWS_AS(diversity_slope(Protocol::Csanc, p, {40.0}), DomainError);
    SlopeOptions mc;
    mc.backend = SlopeBackend::MonteCarlo;
    mc.trials = 1000;
    CHECK_THROWS_AS(diversity_slope(Protocol::Isanc, p, {60.0, 70.0}, mc), RangeError);

    // Monte Carlo backend where the counts are healthy.
    mc.trials = 2'000'000;
    const auto s = diversity_slope(Protocol::Csanc, p, {-5.0, 0.0, 5.0}, mc);
    CHECK(s.N > 0.5);
}

TEST_CASE("normalized spectral efficiency")
{
    CHECK(nse(1.0, 100.0, 1.0, 25.0, 1e-5, 2.0) == doctest::Approx(1.0 / std::log2(16001.0)).epsilon(1e-12));
    CHECK(nse(1.0, 100.0, 1.0, 25.0, 1e-5, 2.0) == doctest::Approx(0.0716).epsilon(1e-3));
    CHECK(nse(1.0, 1e30, 1.0, 25.0, 1e-5, 2.0) < 0.01);
    CHECK(nse(1.0, 50.0, 2.0, 25.0, 1e-5, 2.0) == nse(1.0, 100.0, 1.0, 25.0, 1e-5, 2.0));
    CHECK_THROWS_AS(nse(1.0, 0.0, 1.0, 25.0, 1e-5, 2.0), DomainError);
}

TEST_CASE("DMT endpoints and zero crossings")
{
    const DmtSetting def;
    CHECK(dmt(Protocol::Csanc, User::N, 0.0, def) == 1.0);
    CHECK(dmt(Protocol::Csanc, User::F, 0.0, def) == 2.0);
    CHECK(dmt(Protocol::Isanc, User::N, 0.0, def) == 2.0);
    CHECK(dmt(Protocol::Isanc, User::F, 0.0, def) == 2.0);
    CHECK(dmt(Protocol::Isaoc, User::N, 0.0, def) == 2.0);
    CHECK(dmt(Protocol::Isaoc, User::F, 0.0, def) == 2.0);

    CHECK(dmt(Protocol::Isanc, User::F, 2.0 / 3.0, def) == doctest::Approx(0.0));
    CHECK(dmt(Protocol::Isanc, User::F, 0.6, def) > 0.0);
    CHECK(achievable_multiplexing_gain(Protocol::Isanc, User::F, def) == doctest::Approx(2.0 / 3.0));
    CHECK(achievable_multiplexing_gain(Protocol::Csanc, User::F, def) == doctest::Approx(2.0 / 3.0));
    CHECK(achievable_multiplexing_gain(Protocol::Isanc, User::N, def) == doctest::Approx(0.5));
    CHECK(achievable_multiplexing_gain(Protocol::Csanc, User::N, def) == doctest::Approx(0.5));

    DmtSetting a1;
    a1.a = 1.0;
    a1.b = 0.5;
    CHECK(achievable_multiplexing_gain(Protocol::Isanc, User::F, a1) == doctest::Approx(0.5));

    for (auto u : {User::N, User::F}) {
        CHECK(dmt(Protocol::Isaoc, u, 0.5, def) == doctest::Approx(0.0));
        CHECK(achievable_multiplexing_gain(Protocol::Isaoc, u, def) == doctest::Approx(0.5));
    }
    // Beyond the AMG the curve is clamped.
    CHECK(dmt(Protocol::Csanc, User::N, 0.9, def) == 0.0);
}

TEST_CASE("ISAOC DMT symmetry at theta = 1/2")
{
    DmtSetting st;
    for (bool own : {false, true}) {
        st.own_N_binds = own;
        for (double r = 0.0; r <= 0.5; r += 0.05)
            CHECK(dmt(Protocol::Isaoc, User::N, r, st) == doctest::Approx(dmt(Protocol::Isaoc, User::F, r, st)));
    }
}

TEST_CASE("DMT is non-increasing in r")
{
    for (auto proto : {Protocol::Csanc, Protocol::Isanc, Protocol::Isaoc})
        for (auto u : {User::N, User::F}) {
            DmtSetting st;
            st.theta = 0.4;
            const auto c = dmt_curve(proto, u, st, 21);
            REQUIRE(c.samples.size() == 21);
            CHECK(c.samples.front().second > 0.0);
            CHECK(c.samples.back().second == doctest::Approx(0.0));
            for (std::size_t i = 1; i < c.samples.size(); ++i)
                CHECK(c.samples[i].second <= c.samples[i - 1].second);
        }
}

TEST_CASE("DMT domain errors")
{
    DmtSetting bad;
    bad.a = 1.0;
    bad.b = 0.0;
    CHECK_THROWS_AS(dmt(Protocol::Isanc, User::F, 0.1, bad), DomainError);
    bad.a = 0.5;
    CHECK_THROWS_AS(dmt(Protocol::Csanc, User::N, 0.1, bad), DomainError);
    CHECK_THROWS_AS(dmt(Protocol::Csanc, User::N, -0.1, DmtSetting{}), DomainError);
    DmtSetting th;
    th.theta = 1.0;
    CHECK_THROWS_AS(dmt(Protocol::Isaoc, User::N, 0.1, th), DomainError);
    // (a, b) is a NOMA notion; ISAOC ignores it.
    CHECK_NOTHROW(dmt(Protocol::Isaoc, User::N, 0.1, bad));
    CHECK_THROWS_AS(dmt_curve(Protocol::Csanc, User::N, DmtSetting{}, 1), DomainError);
}
