#include "swipt/params.hpp"

#include <cmath>

#include <fmt/format.h>

namespace swipt {

std::string_view to_string(Protocol p)
{
    switch (p) {
    case Protocol::Csanc: return "csanc";
    case Protocol::Isanc: return "isanc";
    case Protocol::Isaoc: return "isaoc";
    }
    return "?";
}

std::string_view to_string(User u) { return u == User::N ? "N" : "F"; }

Protocol parse_protocol(std::string_view name)
{
    if (name == "csanc") return Protocol::Csanc;
    if (name == "isanc") return Protocol::Isanc;
    if (name == "isaoc") return Protocol::Isaoc;
    throw ValidationError("protocol", fmt::format("unknown protocol '{}'", name));
}

double SystemParams::sinr_target() const { return std::exp2(rate_R) - 1.0; }

double SystemParams::noma_power_N() const { return total_power_PB / (1.0 + power_ratio_k); }
double SystemParams::noma_power_F() const { return total_power_PB - noma_power_N(); }

double SystemParams::ofdma_power_F() const { return power_fraction_rho * total_power_PB; }
double SystemParams::ofdma_power_N() const { return total_power_PB - ofdma_power_F(); }

double SystemParams::scaled_noise_N() const { return std::pow(d_BN, alpha) * sigma2_N; }
double SystemParams::scaled_noise_F() const { return std::pow(d_BF, alpha) * sigma2_F; }

SystemParams figure_defaults()
{
    SystemParams p;
    p.total_power_PB = dbm_to_mw(20.0);
    p.sigma2_N = dbm_to_mw(-50.0);
    p.sigma2_F = dbm_to_mw(-50.0);
    return p;
}

double dbm_to_mw(double dbm)
{
    if (!std::isfinite(dbm)) throw ValidationError("power_dBm", "must be finite");
    return std::pow(10.0, dbm / 10.0);
}

double mw_to_dbm(double mw)
{
    if (!(mw > 0.0) || !std::isfinite(mw)) throw ValidationError("power_mW", "must be positive and finite");
    return 10.0 * std::log10(mw);
}

namespace {

void require(bool ok, const char* field, const std::string& bound)
{
    if (!ok) throw ValidationError(field, bound);
}

void require_positive(double v, const char* field)
{
    require(std::isfinite(v) && v > 0.0, field, fmt::format("must be > 0 (got {})", v));
}

void require_open_unit(double v, const char* field)
{
    require(std::isfinite(v) && v > 0.0 && v < 1.0, field,
            fmt::format("must lie in (0, 1) (got {})", v));
}

} // namespace

SystemParams validate(const SystemParams& params, Protocol protocol)
{
    const auto& p = params;
    require(std::isfinite(p.rate_R) && p.rate_R > 0.0, "rate_R",
            fmt::format("must be > 0 (got {})", p.rate_R));
    require_positive(p.total_power_PB, "total_power_PB");
    require_positive(p.d_BN, "d_BN");
    require_positive(p.d_BF, "d_BF");
    require_positive(p.d_NF, "d_NF");
    require_positive(p.lambda_BN, "lambda_BN");
    require_positive(p.lambda_BF, "lambda_BF");
    require_positive(p.lambda_NF, "lambda_NF");
    require_positive(p.sigma2_N, "sigma2_N");
    require_positive(p.sigma2_F, "sigma2_F");
    require(std::isfinite(p.eta) && p.eta > 0.0 && p.eta <= 1.0, "eta",
            fmt::format("must lie in (0, 1] (got {})", p.eta));
    require(std::isfinite(p.alpha) && p.alpha >= 0.0, "alpha",
            fmt::format("must be >= 0 (got {})", p.alpha));

    if (is_noma(protocol)) {
        const double floor = p.sinr_target();
        require(std::isfinite(p.power_ratio_k) && p.power_ratio_k > floor, "power_ratio_k",
                fmt::format("must exceed 2^R - 1 = {} for NOMA (got {})", floor, p.power_ratio_k));
        // Same condition phrased on the split powers; can only fail through rounding.
        require(p.noma_power_F() - p.noma_power_N() * floor > 0.0, "power_ratio_k",
                "P_F - P_N (2^R - 1) must be positive");
    } else {
        require_open_unit(p.power_fraction_rho, "power_fraction_rho");
        require_open_unit(p.freq_fraction_theta, "freq_fraction_theta");
    }
    return params;
}

} // namespace swipt
