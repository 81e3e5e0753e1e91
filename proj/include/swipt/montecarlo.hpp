#pragma once

#include <cstdint>

#include "swipt/params.hpp"

namespace swipt {

/// Monte Carlo outage counts with 95% normal-approximation half-widths.
/// The half-widths are unreliable when a failure count is below
/// `kReliableFailures`; callers should flag such estimates.
struct OutageEstimate {
    static constexpr std::uint64_t kReliableFailures = 100;

    std::uint64_t trials = 0;
    std::uint64_t failures_N = 0;
    std::uint64_t failures_F = 0;
    std::uint64_t failures_sys = 0;
    double op_N = 0.0;
    double op_F = 0.0;
    double sop = 0.0;
    double ci_half_width_N = 0.0;
    double ci_half_width_F = 0.0;
    double ci_half_width_sys = 0.0;

    bool low_count() const
    {
        return failures_N < kReliableFailures || failures_F < kReliableFailures ||
               failures_sys < kReliableFailures;
    }
};

/// Per-event tallies, matching the event terms the closed forms are built from.
struct EventCounts {
    std::uint64_t trials = 0;
    std::uint64_t ndf0 = 0;       // {NDF=0}
    std::uint64_t fdf0 = 0;       // {FDF=0}
    std::uint64_t ndn0 = 0;       // {NDN=0}
    std::uint64_t fdn0 = 0;       // {FDN=0}
    std::uint64_t ndf1_ndn0 = 0;  // {NDF=1,NDN=0}
    std::uint64_t fdf1_fdn0 = 0;  // {FDF=1,FDN=0}
    std::uint64_t n_full = 0;     // {NDF=1,NDN=1}
    std::uint64_t f_full = 0;     // {FDF=1,FDN=1}
    std::uint64_t nhf_fail = 0;   // {NHF=0,FDF=0,NDF=1,NDN=1}
    std::uint64_t fhn_fail_ndf0 = 0; // {FHN=0,NDF=0,FDF=1,FDN=1}
    std::uint64_t fhn_fail_ndf1 = 0; // {FHN=0,NDF=1,NDN=0,FDF=1,FDN=1}
    std::uint64_t fhn_fail = 0;   // {FHN=0,NDN=0,FDF=1,FDN=1}
};

/// Trials are grouped in fixed blocks of this many; block b draws from
/// substream_seed(seed, b), so counts do not depend on the worker count.
inline constexpr std::uint64_t kTrialsPerBlock = 1u << 16;

/// 0 selects std::thread::hardware_concurrency().
struct McOptions {
    unsigned workers = 0;
};

OutageEstimate estimate(Protocol protocol, const SystemParams& params, std::uint64_t trials,
                        std::uint64_t seed, McOptions options = {});

/// Same draws as `estimate`, tallied per event. FDN/FHN events are only
/// attempted by ISANC and ISAOC.
EventCounts count_events(Protocol protocol, const SystemParams& params, std::uint64_t trials,
                         std::uint64_t seed, McOptions options = {});

/// 95% normal-approximation half-width for `failures` out of `trials`.
double ci_half_width(std::uint64_t failures, std::uint64_t trials);

} // namespace swipt
