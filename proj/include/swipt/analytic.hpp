#pragma once

#include "swipt/params.hpp"
#include "swipt/quadrature.hpp"

namespace swipt {

/// Closed-form event probabilities. Field names follow EventCounts so the two
/// can be compared term by term. Terms a framework never produces stay 0.
struct EventProbs {
    double ndf0 = 0.0;          // {NDF=0}
    double fdf0 = 0.0;          // {FDF=0}
    double ndn0 = 0.0;          // {NDN=0}
    double fdn0 = 0.0;          // {FDN=0}
    double ndf1_ndn0 = 0.0;     // {NDF=1,NDN=0}
    double fdf1_fdn0 = 0.0;     // {FDF=1,FDN=0}
    double n_full = 0.0;        // {NDF=1,NDN=1}
    double f_full = 0.0;        // {FDF=1,FDN=1}
    double nhf_fail = 0.0;      // {NHF=0,FDF=0,NDF=1,NDN=1}
    double fhn_fail_ndf0 = 0.0; // {FHN=0,NDF=0,FDF=1,FDN=1}, NOMA only
    double fhn_fail_ndf1 = 0.0; // {FHN=0,NDF=1,NDN=0,FDF=1,FDN=1}, NOMA only
    double fhn_fail = 0.0;      // {FHN=0,NDN=0,FDF=1,FDN=1}

    /// P{N fails to decode both} and P{F fails to decode both}, without the
    /// cancellation in 1 - n_full.
    double n_not_full() const;
    double f_not_full() const;
};

struct OutageProbs {
    double op_N = 0.0;
    double op_F = 0.0;
    double sop = 0.0;
};

struct AnalyticOptions {
    QuadOptions quad{};
};

EventProbs noma_event_probs(const SystemParams& params, AnalyticOptions options = {});
EventProbs ofdma_event_probs(const SystemParams& params, AnalyticOptions options = {});

OutageProbs outage_csanc(const SystemParams& params, AnalyticOptions options = {});
OutageProbs outage_isanc(const SystemParams& params, AnalyticOptions options = {});
OutageProbs outage_isaoc(const SystemParams& params, AnalyticOptions options = {});
OutageProbs outage(Protocol protocol, const SystemParams& params, AnalyticOptions options = {});

} // namespace swipt
