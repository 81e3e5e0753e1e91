#pragma once

#include "swipt/channel.hpp"
#include "swipt/params.hpp"
#include "swipt/trial.hpp"

namespace swipt {

/// Minimum squared gains for each NOMA decoding step, at beta = 0.
struct NomaThresholds {
    double C_N = 0.0;     // gain N needs to decode both messages
    double C_F = 0.0;     // gain F needs to decode both messages
    double ndf_gain = 0.0; // y needed for N to decode x_F
    double ndn_gain = 0.0; // y needed for N to decode x_N once x_F is cancelled
    double fdf_gain = 0.0; // x needed for F to decode x_F
    double fdn_gain = 0.0; // x needed for F to decode x_N once x_F is cancelled
};

NomaThresholds noma_thresholds(const SystemParams& params);

/// Largest power-splitting fraction that still leaves `threshold` worth of
/// gain for decoding: max(1 - threshold/gain, 0). Zero gain gives zero.
double eh_factor(double gain, double threshold);

/// Per-block decision logic for CSANC and ISANC. Construction precomputes
/// the link constants so the evaluator can be shared across worker threads.
class NomaEvaluator {
public:
    explicit NomaEvaluator(const SystemParams& params);

    TrialOutcome csanc(const ChannelRealization& ch) const;
    TrialOutcome isanc(const ChannelRealization& ch) const;

    const NomaThresholds& thresholds() const { return thr_; }

    // Direct-phase SINRs with all received power sent to decoding.
    double sinr_ndf(double y) const { return P_F_ * y / (P_N_ * y + noise_N_); }
    double sinr_ndn(double y) const { return P_N_ * y / noise_N_; }
    double sinr_fdf(double x) const { return P_F_ * x / (P_N_ * x + noise_F_); }
    double sinr_fdn(double x) const { return P_N_ * x / noise_F_; }
    // x_N at N with x_F still present (used when N failed on x_F).
    double sinr_n_interfered(double y) const { return P_N_ * y / (P_F_ * y + noise_N_); }

    // Relay-phase SNRs from harvested energy.
    double relay_snr_to_F(double beta_N, double y, double z) const { return beta_N * y * z * relay_gain_F_; }
    double relay_snr_to_N(double beta_F, double x, double z) const { return beta_F * x * z * relay_gain_N_; }

    double target() const { return target_; }

private:
    // Shared by both protocols: F-side decoding and N's help to F.
    TrialOutcome common(const ChannelRealization& ch) const;

    double target_;
    double P_N_, P_F_;
    double noise_N_, noise_F_;
    double relay_gain_F_, relay_gain_N_;
    NomaThresholds thr_;
};

TrialOutcome evaluate_csanc_trial(const SystemParams& params, const ChannelRealization& ch);
TrialOutcome evaluate_isanc_trial(const SystemParams& params, const ChannelRealization& ch);

} // namespace swipt
