#pragma once

#include "swipt/channel.hpp"
#include "swipt/params.hpp"
#include "swipt/trial.hpp"

namespace swipt {

/// Gain thresholds for ISAOC. x_F rides on a theta share of the band and x_N
/// on the remaining 1 - theta, so each message has its own SNR target.
struct OfdmaThresholds {
    double target_F = 0.0; // 2^(R/theta) - 1
    double target_N = 0.0; // 2^(R/(1-theta)) - 1
    double C_N = 0.0;
    double C_F = 0.0;
    double ndf_gain = 0.0;
    double ndn_gain = 0.0;
    double fdf_gain = 0.0;
    double fdn_gain = 0.0;
    /// True when x_N is the harder message to decode at either receiver,
    /// i.e. ((1-theta)/P_N)(2^(R/(1-theta))-1) > (theta/P_F)(2^(R/theta)-1).
    bool own_N_binds = false;
};

OfdmaThresholds ofdma_thresholds(const SystemParams& params);

class OfdmaEvaluator {
public:
    explicit OfdmaEvaluator(const SystemParams& params);

    TrialOutcome isaoc(const ChannelRealization& ch) const;

    const OfdmaThresholds& thresholds() const { return thr_; }

    double snr_ndf(double y) const { return P_F_ * y / (noise_N_ * theta_); }
    double snr_ndn(double y) const { return P_N_ * y / (noise_N_ * (1.0 - theta_)); }
    double snr_fdf(double x) const { return P_F_ * x / (noise_F_ * theta_); }
    double snr_fdn(double x) const { return P_N_ * x / (noise_F_ * (1.0 - theta_)); }
    double relay_snr_to_F(double beta_N, double y, double z) const
    {
        return beta_N * y * z * relay_gain_F_ / theta_;
    }
    double relay_snr_to_N(double beta_F, double x, double z) const
    {
        return beta_F * x * z * relay_gain_N_ / (1.0 - theta_);
    }

private:
    double theta_;
    double P_N_, P_F_;
    double noise_N_, noise_F_;
    double relay_gain_F_, relay_gain_N_;
    OfdmaThresholds thr_;
};

TrialOutcome evaluate_isaoc_trial(const SystemParams& params, const ChannelRealization& ch);

} // namespace swipt
