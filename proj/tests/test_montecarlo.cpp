#include "doctest.h"

#include <cmath>

#include "swipt/analytic.hpp"
#include "swipt/channel.hpp"
#include "swipt/montecarlo.hpp"
#include "swipt/noma.hpp"
#include "swipt/ofdma.hpp"

using namespace swipt;

namespace {

bool same_counts(const OutageEstimate& a, const OutageEstimate& b)
{
    return a.trials == b.trials && a.failures_N == b.failures_N && a.failures_F == b.failures_F &&
           a.failures_sys == b.failures_sys;
}

SystemParams low_power()
{
    auto p = figure_defaults();
    p.total_power_PB = dbm_to_mw(0.0);
    return p;
}

} // namespace

TEST_CASE("ci_half_width")
{
    CHECK(ci_half_width(0, 100) == 0.0);
    CHECK(ci_half_width(50, 100) == doctest::Approx(1.96 * 0.05));
    CHECK(ci_half_width(0, 0) == 0.0);
}

TEST_CASE("trials must be positive")
{
    CHECK_THROWS_AS(estimate(Protocol::Csanc, figure_defaults(), 0, 1), ValidationError);
    CHECK_THROWS_AS(count_events(Protocol::Isaoc, figure_defaults(), 0, 1), ValidationError);
}

TEST_CASE("invalid parameters are rejected")
{
    auto p = figure_defaults();
    p.power_ratio_k = 0.9;
    CHECK_THROWS_AS(estimate(Protocol::Isanc, p, 10, 1), ValidationError);
}

TEST_CASE("single trial equals the trial evaluator")
{
    const auto p = low_power();
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        ChannelSampler s(substream_seed(seed, 0));
        const auto ch = s.sample(p);
        const TrialOutcome outs[] = {evaluate_csanc_trial(p, ch), evaluate_isanc_trial(p, ch),
                                     evaluate_isaoc_trial(p, ch)};
        const Protocol protos[] = {Protocol::Csanc, Protocol::Isanc, Protocol::Isaoc};
        for (int i = 0; i < 3; ++i) {
            const auto e = estimate(protos[i], p, 1, seed);
            CHECK(e.op_N == (outs[i].outage_N ? 1.0 : 0.0));
            CHECK(e.op_F == (outs[i].outage_F ? 1.0 : 0.0));
            CHECK(e.sop == (outs[i].system_outage() ? 1.0 : 0.0));
        }
    }
}

TEST_CASE("worker count does not change counts")
{
    const auto p = low_power();
    const std::uint64_t trials = 5 * kTrialsPerBlock + 123;
    for (auto proto : {Protocol::Csanc, Protocol::Isanc, Protocol::Isaoc}) {
        const auto a = estimate(proto, p, trials, 9, {1});
        const auto b = estimate(proto, p, trials, 9, {4});
        const auto c = estimate(proto, p, trials, 9, {7});
        CHECK(same_counts(a, b));
        CHECK(same_counts(a, c));
        const auto d = estimate(proto, p, trials, 10, {4});
        CHECK_FALSE(same_counts(a, d));

        const auto ea = count_events(proto, p, trials, 9, {1});
        const auto eb = count_events(proto, p, trials, 9, {3});
        CHECK(ea.nhf_fail == eb.nhf_fail);
        CHECK(ea.ndf0 == eb.ndf0);
        CHECK(ea.fhn_fail == eb.fhn_fail);
    }
}

TEST_CASE("estimate bookkeeping")
{
    const auto p = low_power();
    const std::uint64_t trials = 300000;
    const auto cs = estimate(Protocol::Csanc, p, trials, 3);
    const auto is = estimate(Protocol::Isanc, p, trials, 3);
    CHECK(cs.failures_F == is.failures_F);
    CHECK(is.failures_N <= cs.failures_N);
    for (const auto& e : {cs, is, estimate(Protocol::Isaoc, p, trials, 3)}) {
        CHECK(e.trials == trials);
        CHECK(e.op_N == doctest::Approx(double(e.failures_N) / trials));
        CHECK(std::max(e.failures_N, e.failures_F) <= e.failures_sys);
        CHECK(e.failures_sys <= e.failures_N + e.failures_F);
        CHECK(e.ci_half_width_sys == doctest::Approx(ci_half_width(e.failures_sys, trials)));
        CHECK_FALSE(e.low_count());
    }
    const auto tiny = estimate(Protocol::Csanc, figure_defaults(), 1000, 3);
    CHECK(tiny.low_count());
}

TEST_CASE("event counts agree with the closed forms")
{
    const auto p = low_power();
    const std::uint64_t n = 4'000'000;
    auto check = [n](std::uint64_t count, double prob) {
        const double est = double(count) / double(n);
        CHECK(std::abs(est - prob) <= 3 * ci_half_width(count, n) + 1e-12);
    };
    const auto cn = count_events(Protocol::Isanc, p, n, 21);
    const auto an = noma_event_probs(p);
    CHECK(cn.trials == n);
    check(cn.ndf0, an.ndf0);
    check(cn.fdf0, an.fdf0);
    check(cn.ndn0, an.ndn0);
    check(cn.fdn0, an.fdn0);
    check(cn.ndf1_ndn0, an.ndf1_ndn0);
    check(cn.fdf1_fdn0, an.fdf1_fdn0);
    check(cn.n_full, an.n_full);
    check(cn.f_full, an.f_full);
    check(cn.nhf_fail, an.nhf_fail);
    check(cn.fhn_fail_ndf0, an.fhn_fail_ndf0);
    check(cn.fhn_fail_ndf1, an.fhn_fail_ndf1);

    const auto co = count_events(Protocol::Isaoc, p, n, 22);
    const auto ao = ofdma_event_probs(p);
    check(co.ndf0, ao.ndf0);
    check(co.fdn0, ao.fdn0);
    check(co.n_full, ao.n_full);
    check(co.nhf_fail, ao.nhf_fail);
    check(co.fhn_fail, ao.fhn_fail);
}
