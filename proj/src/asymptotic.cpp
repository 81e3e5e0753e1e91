#include "swipt/asymptotic.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <fmt/format.h>

#include "swipt/montecarlo.hpp"
#include "swipt/noma.hpp"
#include "swipt/ofdma.hpp"
#include "swipt/parallel.hpp"

namespace swipt {

namespace {

// Integral over [0,1] of g ln(Q/g), with g clamped at 0 (g ln(Q/g) -> 0).
template <class G>
double log_moment(G g, double Q, const QuadOptions& quad)
{
    return integrate(
               [&](double u) {
                   const double v = g(u);
                   return v > 0.0 ? v * std::log(Q / v) : 0.0;
               },
               0.0, 1.0, quad)
        .value;
}

} // namespace

EventProbs highsnr_noma_event_probs(const SystemParams& params, AnalyticOptions options)
{
    const SystemParams p = validate(params, Protocol::Isanc);
    const NomaThresholds t = noma_thresholds(p);
    const double c = p.sinr_target();
    const double k = p.power_ratio_k;
    const double P_B = p.total_power_PB;
    const double eta = p.eta;
    const double two_R = std::exp2(p.rate_R);
    const bool own_binds = k > two_R;
    const double d_NF = std::pow(p.d_NF, p.alpha);
    const double D_F = std::pow(p.d_BN, p.alpha) * d_NF * p.sigma2_F;
    const double D_N = std::pow(p.d_BF, p.alpha) * d_NF * p.sigma2_N;

    EventProbs e;
    e.ndf0 = t.ndf_gain / p.lambda_BN;
    e.fdf0 = t.fdf_gain / p.lambda_BF;
    e.ndn0 = t.C_N / p.lambda_BN;
    e.fdn0 = t.C_F / p.lambda_BF;
    if (own_binds) {
        e.ndf1_ndn0 = (t.ndn_gain - t.ndf_gain) / p.lambda_BN;
        e.fdf1_fdn0 = (t.fdn_gain - t.fdf_gain) / p.lambda_BF;
    }
    e.n_full = 1.0 - e.ndn0;
    e.f_full = 1.0 - e.fdn0;

    const double spread = c * (1.0 + k) / (k - c); // gain threshold * P_B / scaled noise

    const double Q_F = p.lambda_BN * p.lambda_NF * eta * P_B / D_F;
    const auto g_F = [&](double u) { return c - k / (1.0 + (k - c) / (u * c)); };
    e.nhf_fail = p.scaled_noise_F() * D_F * spread / (p.lambda_BF * p.lambda_BN * p.lambda_NF * eta) *
                 log_moment(g_F, Q_F, options.quad) / (P_B * P_B);

    // x_N seen through x_F interference at N: SINR 1 / (k + (k - c)/(u c)).
    const double Q_N = p.lambda_BF * p.lambda_NF * eta * P_B / D_N;
    const auto g_N = [&](double u) { return c - 1.0 / (k + (k - c) / (u * c)); };
    e.fhn_fail_ndf0 = p.scaled_noise_N() * D_N * spread / (p.lambda_BF * p.lambda_BN * p.lambda_NF * eta) *
                      log_moment(g_N, Q_N, options.quad) / (P_B * P_B);

    if (own_binds) {
        const double W = c * (k - two_R) / (k - c);
        e.fhn_fail_ndf1 = p.scaled_noise_N() * D_N * (1.0 + k) /
                          (p.lambda_BF * p.lambda_BN * p.lambda_NF * eta) * 0.5 * W * W *
                          (std::log(Q_N / W) + 0.5) / (P_B * P_B);
    }
    e.fhn_fail = e.fhn_fail_ndf0 + e.fhn_fail_ndf1;
    return e;
}

EventProbs highsnr_ofdma_event_probs(const SystemParams& params)
{
    const SystemParams p = validate(params, Protocol::Isaoc);
    const OfdmaThresholds t = ofdma_thresholds(p);
    const double theta = p.freq_fraction_theta;
    const double P_B = p.total_power_PB;
    const double eta = p.eta;
    const double d_NF = std::pow(p.d_NF, p.alpha);
    const double D_F = std::pow(p.d_BN, p.alpha) * d_NF * p.sigma2_F;
    const double D_N = std::pow(p.d_BF, p.alpha) * d_NF * p.sigma2_N;

    EventProbs e;
    e.ndf0 = t.ndf_gain / p.lambda_BN;
    e.ndn0 = t.ndn_gain / p.lambda_BN;
    e.fdf0 = t.fdf_gain / p.lambda_BF;
    e.fdn0 = t.fdn_gain / p.lambda_BF;
    e.ndf1_ndn0 = std::max(t.ndn_gain - t.ndf_gain, 0.0) / p.lambda_BN;
    e.fdf1_fdn0 = std::max(t.fdn_gain - t.fdf_gain, 0.0) / p.lambda_BF;
    e.n_full = 1.0 - t.C_N / p.lambda_BN;
    e.f_full = 1.0 - t.C_F / p.lambda_BF;

    // Relay failure ~ (threshold/lambda) * (1/Q) * (ln sqrt(Q) + 1/4).
    const double inv_Q_F = theta * t.target_F * D_F / (p.lambda_BN * p.lambda_NF * eta * P_B);
    e.nhf_fail = t.fdf_gain / p.lambda_BF * inv_Q_F * (0.5 * std::log(1.0 / inv_Q_F) + 0.25);
    const double inv_Q_N = (1.0 - theta) * t.target_N * D_N / (p.lambda_BF * p.lambda_NF * eta * P_B);
    e.fhn_fail = t.ndn_gain / p.lambda_BN * inv_Q_N * (0.5 * std::log(1.0 / inv_Q_N) + 0.25);
    return e;
}

namespace {

double ls_slope(const std::vector<double>& xs, const std::vector<double>& ys)
{
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxy / sxx;
}

} // namespace

DiversitySlopes diversity_slope(Protocol protocol, const SystemParams& params, const std::vector<double>& pb_grid_dBm,
                                SlopeOptions options)
{
    if (pb_grid_dBm.size() < 2) throw DomainError("diversity_slope: need at least two P_B points");
    const auto [lo, hi] = std::minmax_element(pb_grid_dBm.begin(), pb_grid_dBm.end());
    if (*lo == *hi) throw DomainError("diversity_slope: P_B grid has no spread");

    std::vector<OutageProbs> ops(pb_grid_dBm.size());
    const auto eval = [&](std::size_t i) {
        SystemParams p = params;
        p.total_power_PB = dbm_to_mw(pb_grid_dBm[i]);
        if (options.backend == SlopeBackend::Analytic) {
            ops[i] = outage(protocol, p);
        } else {
            const OutageEstimate mc = estimate(protocol, p, options.trials, options.seed, {1});
            ops[i] = {mc.op_N, mc.op_F, mc.sop};
        }
    };
    // Monte Carlo parallelizes inside each point instead.
    parallel_for(pb_grid_dBm.size(), options.backend == SlopeBackend::Analytic ? options.workers : 1, eval);

    std::vector<double> xs, yN, yF, yS;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const OutageProbs& o = ops[i];
        if (!(o.op_N > 0.0 && o.op_F > 0.0 && o.sop > 0.0))
            throw RangeError(fmt::format("diversity_slope: zero outage at P_B = {} dBm; lower P_B or raise trials",
                                         pb_grid_dBm[i]));
        xs.push_back(pb_grid_dBm[i] / 10.0);
        yN.push_back(-std::log10(o.op_N));
        yF.push_back(-std::log10(o.op_F));
        yS.push_back(-std::log10(o.sop));
    }
    return {ls_slope(xs, yN), ls_slope(xs, yF), ls_slope(xs, yS)};
}

double nse(double R, double P_B, double lambda, double d, double sigma2, double alpha)
{
    if (!(R > 0 && P_B > 0 && lambda > 0 && d > 0 && sigma2 > 0 && alpha > 0))
        throw DomainError("nse: all arguments must be positive");
    return R / std::log2(1.0 + P_B * lambda / (std::pow(d, alpha) * sigma2));
}

namespace {

// d(r) = max(0, min_i (d0_i - s_i r)).
struct Piece {
    double d0;
    double s;
};

struct Pieces {
    std::array<Piece, 2> items{};
    int count = 0;
    void add(double d0, double s) { items[static_cast<std::size_t>(count++)] = {d0, s}; }
};

Pieces dmt_pieces(Protocol protocol, User user, const DmtSetting& st)
{
    Pieces out;
    if (is_noma(protocol)) {
        const bool ok = (st.a == 1.0 && st.b > 0.0) || (st.a > 1.0 && st.b >= 0.0);
        if (!ok)
            throw DomainError(
                fmt::format("dmt: need a = 1 with b > 0, or a > 1 with b >= 0 (got a = {}, b = {})", st.a, st.b));
        if (user == User::F)
            out.add(2.0, st.a > 1.0 ? 3.0 : 4.0);
        else if (protocol == Protocol::Csanc)
            out.add(1.0, 2.0);
        else
            out.add(2.0, 4.0);
        return out;
    }

    const double th = st.theta;
    if (!(th > 0.0 && th < 1.0)) throw DomainError(fmt::format("dmt: theta must be in (0, 1) (got {})", th));
    const double shared = 1.0 / (th * (1.0 - th));
    if (user == User::N) {
        out.add(2.0, 2.0 / (1.0 - th));
        if (!st.own_N_binds) out.add(2.0, shared);
    } else {
        out.add(2.0, 2.0 / th);
        if (st.own_N_binds) out.add(2.0, shared);
    }
    return out;
}

} // namespace

double dmt(Protocol protocol, User user, double r, const DmtSetting& setting)
{
    if (!(r >= 0.0)) throw DomainError(fmt::format("dmt: multiplexing gain must be >= 0 (got {})", r));
    const Pieces pieces = dmt_pieces(protocol, user, setting);
    double d = pieces.items[0].d0 - pieces.items[0].s * r;
    for (int i = 1; i < pieces.count; ++i) d = std::min(d, pieces.items[i].d0 - pieces.items[i].s * r);
    return std::max(d, 0.0);
}

double achievable_multiplexing_gain(Protocol protocol, User user, const DmtSetting& setting)
{
    const Pieces pieces = dmt_pieces(protocol, user, setting);
    double amg = pieces.items[0].d0 / pieces.items[0].s;
    for (int i = 1; i < pieces.count; ++i) amg = std::min(amg, pieces.items[i].d0 / pieces.items[i].s);
    return amg;
}

DmtCurve dmt_curve(Protocol protocol, User user, const DmtSetting& setting, int points)
{
    if (points < 2) throw DomainError("dmt_curve: need at least two points");
    DmtCurve curve{protocol, user, setting, {}};
    const double amg = achievable_multiplexing_gain(protocol, user, setting);
    curve.samples.reserve(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double r = amg * i / (points - 1);
        curve.samples.emplace_back(r, dmt(protocol, user, r, setting));
    }
    return curve;
}

} // namespace swipt
