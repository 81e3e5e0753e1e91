#include "swipt/analytic.hpp"

#include <algorithm>
#include <cmath>

#include "swipt/noma.hpp"
#include "swipt/ofdma.hpp"
#include "swipt/special.hpp"

namespace swipt {

namespace {

// P{g < t} for g ~ Exp(mean lambda).
double cdf(double t, double lambda) { return -std::expm1(-t / lambda); }

// P{g >= t}.
double sf(double t, double lambda) { return std::exp(-t / lambda); }

// P{lo <= g < hi}, 0 for an empty range.
double band(double lo, double hi, double lambda)
{
    if (hi <= lo) return 0.0;
    return sf(lo, lambda) * -std::expm1(-(hi - lo) / lambda);
}

/// Probability that a helper which decoded both messages with gain above
/// `C` (mean `lambda_helper`) still fails to rescue the other user. Given
/// the helper is active, its harvested surplus gain is again exponential,
/// so conditional failure is 1 - psi K1(psi) with psi^2 = scale * gap(v),
/// averaged over the other user's direct gain v ~ Exp(lambda_direct) on [lo, hi).
template <class Gap>
double relay_failure(double C, double lambda_helper, double lambda_direct, double lo, double hi, double scale,
                     Gap gap, const QuadOptions& quad)
{
    if (hi <= lo) return 0.0;
    const auto integrand = [&](double v) {
        const double psi = std::sqrt(scale * std::max(gap(v), 0.0));
        return std::exp(-v / lambda_direct) / lambda_direct * one_minus_psi_k1(psi);
    };
    return sf(C, lambda_helper) * integrate(integrand, lo, hi, quad).value;
}

struct Links {
    double D_F; // d_BN^a d_NF^a sigma_F^2: N -> F relay path loss times noise at F
    double D_N; // d_BF^a d_NF^a sigma_N^2
};

Links links(const SystemParams& p)
{
    const double d_NF = std::pow(p.d_NF, p.alpha);
    return {std::pow(p.d_BN, p.alpha) * d_NF * p.sigma2_F, std::pow(p.d_BF, p.alpha) * d_NF * p.sigma2_N};
}

} // namespace

double EventProbs::n_not_full() const { return std::max(ndf0, ndn0); }
double EventProbs::f_not_full() const { return std::max(fdf0, fdn0); }

EventProbs noma_event_probs(const SystemParams& params, AnalyticOptions options)
{
    const SystemParams p = validate(params, Protocol::Isanc);
    const NomaThresholds t = noma_thresholds(p);
    const double c = p.sinr_target();
    const double P_N = p.noma_power_N();
    const double P_F = p.noma_power_F();
    const double nN = p.scaled_noise_N();
    const double nF = p.scaled_noise_F();
    const bool own_binds = p.power_ratio_k > std::exp2(p.rate_R);
    const Links l = links(p);
    const double eP = p.eta * p.total_power_PB;

    EventProbs e;
    e.ndf0 = cdf(t.ndf_gain, p.lambda_BN);
    e.fdf0 = cdf(t.fdf_gain, p.lambda_BF);
    e.ndn0 = cdf(t.C_N, p.lambda_BN);
    e.fdn0 = cdf(t.C_F, p.lambda_BF);
    e.ndf1_ndn0 = own_binds ? band(t.ndf_gain, t.ndn_gain, p.lambda_BN) : 0.0;
    e.fdf1_fdn0 = own_binds ? band(t.fdf_gain, t.fdn_gain, p.lambda_BF) : 0.0;
    e.n_full = sf(t.C_N, p.lambda_BN);
    e.f_full = sf(t.C_F, p.lambda_BF);

    // N relays x_F to F, which combines with its own failed direct copy.
    const double scale_F = 4.0 * l.D_F / (p.lambda_BN * p.lambda_NF * eP);
    e.nhf_fail = relay_failure(
        t.C_N, p.lambda_BN, p.lambda_BF, 0.0, t.fdf_gain, scale_F,
        [&](double x) { return c - P_F * x / (P_N * x + nF); }, options.quad);

    // F relays x_N to N. If N missed x_F its direct copy of x_N is interfered.
    const double scale_N = 4.0 * l.D_N / (p.lambda_BF * p.lambda_NF * eP);
    e.fhn_fail_ndf0 = relay_failure(
        t.C_F, p.lambda_BF, p.lambda_BN, 0.0, t.ndf_gain, scale_N,
        [&](double y) { return c - P_N * y / (P_F * y + nN); }, options.quad);
    if (own_binds) {
        e.fhn_fail_ndf1 = relay_failure(
            t.C_F, p.lambda_BF, p.lambda_BN, t.ndf_gain, t.ndn_gain, scale_N,
            [&](double y) { return c - P_N * y / nN; }, options.quad);
    }
    e.fhn_fail = e.fhn_fail_ndf0 + e.fhn_fail_ndf1;
    return e;
}

EventProbs ofdma_event_probs(const SystemParams& params, AnalyticOptions options)
{
    const SystemParams p = validate(params, Protocol::Isaoc);
    const OfdmaThresholds t = ofdma_thresholds(p);
    const double theta = p.freq_fraction_theta;
    const double P_N = p.ofdma_power_N();
    const double P_F = p.ofdma_power_F();
    const double nN = p.scaled_noise_N();
    const double nF = p.scaled_noise_F();
    const Links l = links(p);
    const double eP = p.eta * p.total_power_PB;

    EventProbs e;
    e.ndf0 = cdf(t.ndf_gain, p.lambda_BN);
    e.ndn0 = cdf(t.ndn_gain, p.lambda_BN);
    e.fdf0 = cdf(t.fdf_gain, p.lambda_BF);
    e.fdn0 = cdf(t.fdn_gain, p.lambda_BF);
    e.ndf1_ndn0 = band(t.ndf_gain, t.ndn_gain, p.lambda_BN);
    e.fdf1_fdn0 = band(t.fdf_gain, t.fdn_gain, p.lambda_BF);
    e.n_full = sf(t.C_N, p.lambda_BN);
    e.f_full = sf(t.C_F, p.lambda_BF);

    const double scale_F = 4.0 * l.D_F * theta / (p.lambda_BN * p.lambda_NF * eP);
    e.nhf_fail = relay_failure(
        t.C_N, p.lambda_BN, p.lambda_BF, 0.0, t.fdf_gain, scale_F,
        [&](double x) { return t.target_F - P_F * x / (nF * theta); }, options.quad);

    const double scale_N = 4.0 * l.D_N * (1.0 - theta) / (p.lambda_BF * p.lambda_NF * eP);
    e.fhn_fail = relay_failure(
        t.C_F, p.lambda_BF, p.lambda_BN, 0.0, t.ndn_gain, scale_N,
        [&](double y) { return t.target_N - P_N * y / (nN * (1.0 - theta)); }, options.quad);
    return e;
}

OutageProbs outage_csanc(const SystemParams& params, AnalyticOptions options)
{
    const EventProbs e = noma_event_probs(params, options);
    OutageProbs o;
    o.op_N = e.ndn0;
    o.op_F = e.fdf0 * e.ndn0 + e.nhf_fail;
    o.sop = e.ndn0 + e.nhf_fail;
    return o;
}

OutageProbs outage_isanc(const SystemParams& params, AnalyticOptions options)
{
    const EventProbs e = noma_event_probs(params, options);
    OutageProbs o;
    o.op_N = e.fdn0 * e.ndn0 + e.fhn_fail;
    o.op_F = e.fdf0 * e.ndn0 + e.nhf_fail;
    o.sop = o.op_N + e.nhf_fail;
    return o;
}

OutageProbs outage_isaoc(const SystemParams& params, AnalyticOptions options)
{
    const EventProbs e = ofdma_event_probs(params, options);
    OutageProbs o;
    o.op_F = e.nhf_fail + e.fdf0 * e.n_not_full();
    o.op_N = e.fhn_fail + e.ndn0 * e.f_not_full();
    // Both fail only when F misses x_F and N misses x_N, so
    // sop = op_N + op_F - P{FDF=0} P{NDN=0}, written without the subtraction.
    o.sop = e.nhf_fail + e.fhn_fail + e.fdf0 * e.n_not_full() + e.ndn0 * e.fdf1_fdn0;
    return o;
}

OutageProbs outage(Protocol protocol, const SystemParams& params, AnalyticOptions options)
{
    switch (protocol) {
    case Protocol::Csanc: return outage_csanc(params, options);
    case Protocol::Isanc: return outage_isanc(params, options);
    case Protocol::Isaoc: return outage_isaoc(params, options);
    }
    return {};
}

} // namespace swipt
