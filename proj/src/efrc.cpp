#include "swipt/efrc.hpp"

#include <cmath>

#include <fmt/format.h>

#include "swipt/noma.hpp"
#include "swipt/ofdma.hpp"

namespace swipt {

namespace {

double miss(double threshold, double lambda) { return -std::expm1(-threshold / lambda); }

} // namespace

double efrc_sop_csanc(const SystemParams& params)
{
    const SystemParams p = validate(params, Protocol::Csanc);
    return miss(noma_thresholds(p).C_N, p.lambda_BN);
}

double efrc_sop_isanc(const SystemParams& params)
{
    const SystemParams p = validate(params, Protocol::Isanc);
    const NomaThresholds t = noma_thresholds(p);
    return miss(t.C_N, p.lambda_BN) * miss(t.C_F, p.lambda_BF);
}

double efrc_sop_isaoc(const SystemParams& params)
{
    const SystemParams p = validate(params, Protocol::Isaoc);
    const OfdmaThresholds t = ofdma_thresholds(p);
    return miss(t.C_F, p.lambda_BF) * miss(t.C_N, p.lambda_BN);
}

IsancOptimum efrc_optimal_isanc(const SystemParams& params)
{
    SystemParams p = params;
    p.power_ratio_k = std::exp2(p.rate_R);
    return {p.power_ratio_k, efrc_sop_isanc(p)};
}

double efrc_balanced_rho(double R, double theta)
{
    if (!(theta > 0.0 && theta < 1.0)) throw DomainError(fmt::format("theta must be in (0, 1) (got {})", theta));
    const double u = (1.0 - theta) * (std::exp2(R / (1.0 - theta)) - 1.0); // N's requirement
    const double v = theta * (std::exp2(R / theta) - 1.0);                 // F's requirement
    return v / (u + v);
}

IsaocOptimum efrc_optimal_isaoc(const SystemParams& params)
{
    SystemParams p = params;
    p.freq_fraction_theta = 0.5;
    p.power_fraction_rho = efrc_balanced_rho(p.rate_R, 0.5);
    return {p.freq_fraction_theta, p.power_fraction_rho, efrc_sop_isaoc(p)};
}

double efrc_f(double theta, double R)
{
    if (!(theta > 0.0 && theta < 1.0)) throw DomainError(fmt::format("theta must be in (0, 1) (got {})", theta));
    return theta * (std::exp2(R / theta) - 1.0) + (1.0 - theta) * (std::exp2(R / (1.0 - theta)) - 1.0);
}

double efrc_optimal_sop_closed_form(const SystemParams& p)
{
    const double need = std::exp2(2.0 * p.rate_R) - 1.0;
    const double a_N = std::pow(p.d_BN, p.alpha) * p.sigma2_N * need / (p.lambda_BN * p.total_power_PB);
    const double a_F = std::pow(p.d_BF, p.alpha) * p.sigma2_F * need / (p.lambda_BF * p.total_power_PB);
    return -std::expm1(-a_N) * -std::expm1(-a_F);
}

} // namespace swipt
