#include "swipt/noma.hpp"

#include <algorithm>
#include <cmath>

namespace swipt {

NomaThresholds noma_thresholds(const SystemParams& p)
{
    const double c = p.sinr_target();
    const double P_N = p.noma_power_N();
    const double P_F = p.noma_power_F();
    const double headroom = P_F - P_N * c;

    NomaThresholds t;
    t.ndf_gain = p.scaled_noise_N() * c / headroom;
    t.ndn_gain = p.scaled_noise_N() * c / P_N;
    t.fdf_gain = p.scaled_noise_F() * c / headroom;
    t.fdn_gain = p.scaled_noise_F() * c / P_N;

    // Above k = 2^R the own-message step is the binding one, otherwise x_F is.
    const bool own_binds = p.power_ratio_k > std::exp2(p.rate_R);
    t.C_N = own_binds ? t.ndn_gain : t.ndf_gain;
    t.C_F = own_binds ? t.fdn_gain : t.fdf_gain;
    return t;
}

double eh_factor(double gain, double threshold)
{
    if (gain <= threshold) return 0.0;
    return std::max(1.0 - threshold / gain, 0.0);
}

NomaEvaluator::NomaEvaluator(const SystemParams& p)
    : target_(p.sinr_target()),
      P_N_(p.noma_power_N()),
      P_F_(p.noma_power_F()),
      noise_N_(p.scaled_noise_N()),
      noise_F_(p.scaled_noise_F()),
      relay_gain_F_(p.eta * p.total_power_PB /
                    (std::pow(p.d_BN, p.alpha) * std::pow(p.d_NF, p.alpha) * p.sigma2_F)),
      relay_gain_N_(p.eta * p.total_power_PB /
                    (std::pow(p.d_BF, p.alpha) * std::pow(p.d_NF, p.alpha) * p.sigma2_N)),
      thr_(noma_thresholds(p))
{
}

TrialOutcome NomaEvaluator::common(const ChannelRealization& ch) const
{
    TrialOutcome o;
    o.fdf = sinr_fdf(ch.x) >= target_;
    o.ndf = sinr_ndf(ch.y) >= target_;
    o.ndn = o.ndf && sinr_ndn(ch.y) >= target_;
    if (o.ndf && o.ndn) o.beta_N = eh_factor(ch.y, thr_.C_N);

    if (!o.fdf && o.ndf && o.ndn) {
        // F has failed, so beta_F = 0 and its direct copy is undiminished.
        const double combined = sinr_fdf(ch.x) + relay_snr_to_F(o.beta_N, ch.y, ch.z);
        o.nhf = combined >= target_;
    }
    o.outage_F = !(o.fdf || o.nhf);
    return o;
}

TrialOutcome NomaEvaluator::csanc(const ChannelRealization& ch) const
{
    TrialOutcome o = common(ch);
    o.outage_N = !o.ndn;
    return o;
}

TrialOutcome NomaEvaluator::isanc(const ChannelRealization& ch) const
{
    TrialOutcome o = common(ch);
    o.fdn = o.fdf && sinr_fdn(ch.x) >= target_;
    if (o.fdf && o.fdn) o.beta_F = eh_factor(ch.x, thr_.C_F);

    if (!o.ndn && o.fdf && o.fdn) {
        const double direct = o.ndf ? sinr_ndn(ch.y) : sinr_n_interfered(ch.y);
        o.fhn = direct + relay_snr_to_N(o.beta_F, ch.x, ch.z) >= target_;
    }
    o.outage_N = !(o.ndn || o.fhn);
    return o;
}

TrialOutcome evaluate_csanc_trial(const SystemParams& params, const ChannelRealization& ch)
{
    return NomaEvaluator(params).csanc(ch);
}

TrialOutcome evaluate_isanc_trial(const SystemParams& params, const ChannelRealization& ch)
{
    return NomaEvaluator(params).isanc(ch);
}

} // namespace swipt
