#include "swipt/ofdma.hpp"

#include <cmath>

#include "swipt/noma.hpp"

namespace swipt {

OfdmaThresholds ofdma_thresholds(const SystemParams& p)
{
    const double theta = p.freq_fraction_theta;
    const double P_F = p.ofdma_power_F();
    const double P_N = p.ofdma_power_N();

    OfdmaThresholds t;
    t.target_F = std::exp2(p.rate_R / theta) - 1.0;
    t.target_N = std::exp2(p.rate_R / (1.0 - theta)) - 1.0;

    const double need_F = theta / P_F * t.target_F;         // per unit scaled noise
    const double need_N = (1.0 - theta) / P_N * t.target_N;
    t.own_N_binds = need_N > need_F;

    t.ndf_gain = p.scaled_noise_N() * need_F;
    t.ndn_gain = p.scaled_noise_N() * need_N;
    t.fdf_gain = p.scaled_noise_F() * need_F;
    t.fdn_gain = p.scaled_noise_F() * need_N;
    t.C_N = t.own_N_binds ? t.ndn_gain : t.ndf_gain;
    t.C_F = t.own_N_binds ? t.fdn_gain : t.fdf_gain;
    return t;
}

OfdmaEvaluator::OfdmaEvaluator(const SystemParams& p)
    : theta_(p.freq_fraction_theta),
      P_N_(p.ofdma_power_N()),
      P_F_(p.ofdma_power_F()),
      noise_N_(p.scaled_noise_N()),
      noise_F_(p.scaled_noise_F()),
      relay_gain_F_(p.eta * p.total_power_PB /
                    (std::pow(p.d_BN, p.alpha) * std::pow(p.d_NF, p.alpha) * p.sigma2_F)),
      relay_gain_N_(p.eta * p.total_power_PB /
                    (std::pow(p.d_BF, p.alpha) * std::pow(p.d_NF, p.alpha) * p.sigma2_N)),
      thr_(ofdma_thresholds(p))
{
}

TrialOutcome OfdmaEvaluator::isaoc(const ChannelRealization& ch) const
{
    TrialOutcome o;
    o.ndf = snr_ndf(ch.y) >= thr_.target_F;
    o.ndn = snr_ndn(ch.y) >= thr_.target_N;
    o.fdf = snr_fdf(ch.x) >= thr_.target_F;
    o.fdn = snr_fdn(ch.x) >= thr_.target_N;

    if (o.ndf && o.ndn) o.beta_N = eh_factor(ch.y, thr_.C_N);
    if (o.fdf && o.fdn) o.beta_F = eh_factor(ch.x, thr_.C_F);

    if (!o.fdf && o.ndf && o.ndn)
        o.nhf = snr_fdf(ch.x) + relay_snr_to_F(o.beta_N, ch.y, ch.z) >= thr_.target_F;
    if (!o.ndn && o.fdf && o.fdn)
        o.fhn = snr_ndn(ch.y) + relay_snr_to_N(o.beta_F, ch.x, ch.z) >= thr_.target_N;

    o.outage_N = !(o.ndn || o.fhn);
    o.outage_F = !(o.fdf || o.nhf);
    return o;
}

TrialOutcome evaluate_isaoc_trial(const SystemParams& params, const ChannelRealization& ch)
{
    return OfdmaEvaluator(params).isaoc(ch);
}

} // namespace swipt
