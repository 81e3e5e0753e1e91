#include "swipt/montecarlo.hpp"

#include <cassert>
#include <cmath>
#include <vector>

#include "swipt/channel.hpp"
#include "swipt/noma.hpp"
#include "swipt/ofdma.hpp"
#include "swipt/parallel.hpp"

namespace swipt {

double ci_half_width(std::uint64_t failures, std::uint64_t trials)
{
    if (trials == 0) return 0.0;
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(failures) / n;
    return 1.96 * std::sqrt(p * (1.0 - p) / n);
}

namespace {

void require_trials(std::uint64_t trials)
{
    if (trials < 1) throw ValidationError("trials", "must be >= 1");
}

/// Runs `trials` draws through `on_trial(ch)` block by block and merges the
/// per-block accumulators with `merge`. Accumulators are integer tallies, so
/// the merged result is independent of scheduling.
template <class Acc, class OnTrial>
Acc run_blocks(std::uint64_t trials, std::uint64_t seed, unsigned workers, const SystemParams& params,
               OnTrial on_trial)
{
    const std::uint64_t blocks = (trials + kTrialsPerBlock - 1) / kTrialsPerBlock;
    std::vector<Acc> partial(blocks);
    parallel_for(blocks, workers, [&](std::size_t b) {
        ChannelSampler sampler(substream_seed(seed, b));
        const std::uint64_t begin = b * kTrialsPerBlock;
        const std::uint64_t end = std::min(trials, begin + kTrialsPerBlock);
        Acc acc{};
        for (std::uint64_t t = begin; t < end; ++t) on_trial(acc, sampler.sample(params));
        partial[b] = acc;
    });
    Acc total{};
    for (const Acc& a : partial) total += a;
    return total;
}

/// Evaluates one protocol without per-trial dispatch on the protocol tag.
template <class Visit>
void with_evaluator(Protocol protocol, const SystemParams& params, Visit&& visit)
{
    switch (protocol) {
    case Protocol::Csanc: {
        const NomaEvaluator ev(params);
        visit([&ev](const ChannelRealization& ch) { return ev.csanc(ch); });
        break;
    }
    case Protocol::Isanc: {
        const NomaEvaluator ev(params);
        visit([&ev](const ChannelRealization& ch) { return ev.isanc(ch); });
        break;
    }
    case Protocol::Isaoc: {
        const OfdmaEvaluator ev(params);
        visit([&ev](const ChannelRealization& ch) { return ev.isaoc(ch); });
        break;
    }
    }
}

struct OutageTally {
    std::uint64_t n = 0, f = 0, sys = 0;
    OutageTally& operator+=(const OutageTally& o)
    {
        n += o.n;
        f += o.f;
        sys += o.sys;
        return *this;
    }
};

struct EventTally : EventCounts {
    EventTally& operator+=(const EventTally& o)
    {
        ndf0 += o.ndf0;
        fdf0 += o.fdf0;
        ndn0 += o.ndn0;
        fdn0 += o.fdn0;
        ndf1_ndn0 += o.ndf1_ndn0;
        fdf1_fdn0 += o.fdf1_fdn0;
        n_full += o.n_full;
        f_full += o.f_full;
        nhf_fail += o.nhf_fail;
        fhn_fail_ndf0 += o.fhn_fail_ndf0;
        fhn_fail_ndf1 += o.fhn_fail_ndf1;
        fhn_fail += o.fhn_fail;
        return *this;
    }
};

} // namespace

OutageEstimate estimate(Protocol protocol, const SystemParams& params, std::uint64_t trials,
                        std::uint64_t seed, McOptions options)
{
    require_trials(trials);
    const SystemParams p = validate(params, protocol);

    OutageTally tally;
    with_evaluator(protocol, p, [&](auto evaluate) {
        tally = run_blocks<OutageTally>(trials, seed, options.workers, p,
                                        [&](OutageTally& acc, const ChannelRealization& ch) {
                                            const TrialOutcome o = evaluate(ch);
                                            assert(outcome_consistent(o, protocol));
                                            acc.n += o.outage_N;
                                            acc.f += o.outage_F;
                                            acc.sys += o.system_outage();
                                        });
    });

    OutageEstimate e;
    e.trials = trials;
    e.failures_N = tally.n;
    e.failures_F = tally.f;
    e.failures_sys = tally.sys;
    const double n = static_cast<double>(trials);
    e.op_N = static_cast<double>(tally.n) / n;
    e.op_F = static_cast<double>(tally.f) / n;
    e.sop = static_cast<double>(tally.sys) / n;
    e.ci_half_width_N = ci_half_width(tally.n, trials);
    e.ci_half_width_F = ci_half_width(tally.f, trials);
    e.ci_half_width_sys = ci_half_width(tally.sys, trials);
    return e;
}

EventCounts count_events(Protocol protocol, const SystemParams& params, std::uint64_t trials,
                         std::uint64_t seed, McOptions options)
{
    require_trials(trials);
    const SystemParams p = validate(params, protocol);

    EventTally tally;
    with_evaluator(protocol, p, [&](auto evaluate) {
        tally = run_blocks<EventTally>(trials, seed, options.workers, p,
                                       [&](EventTally& acc, const ChannelRealization& ch) {
                                           const TrialOutcome o = evaluate(ch);
                                           const bool n_full = o.ndf && o.ndn;
                                           const bool f_full = o.fdf && o.fdn;
                                           acc.ndf0 += !o.ndf;
                                           acc.fdf0 += !o.fdf;
                                           acc.ndn0 += !o.ndn;
                                           acc.fdn0 += !o.fdn;
                                           acc.ndf1_ndn0 += o.ndf && !o.ndn;
                                           acc.fdf1_fdn0 += o.fdf && !o.fdn;
                                           acc.n_full += n_full;
                                           acc.f_full += f_full;
                                           acc.nhf_fail += !o.nhf && !o.fdf && n_full;
                                           acc.fhn_fail_ndf0 += !o.fhn && !o.ndf && f_full;
                                           acc.fhn_fail_ndf1 += !o.fhn && o.ndf && !o.ndn && f_full;
                                           acc.fhn_fail += !o.fhn && !o.ndn && f_full;
                                       });
    });
    EventCounts counts = tally;
    counts.trials = trials;
    return counts;
}

} // namespace swipt
