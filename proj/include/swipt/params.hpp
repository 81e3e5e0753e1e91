#pragma once

#include <string>
#include <string_view>

#include "swipt/errors.hpp"

namespace swipt {

enum class Protocol { Csanc, Isanc, Isaoc };
enum class User { N, F };

std::string_view to_string(Protocol p);
std::string_view to_string(User u);
Protocol parse_protocol(std::string_view name);

inline bool is_noma(Protocol p) { return p != Protocol::Isaoc; }

/// Scenario constants. Powers and noise variances are linear milliwatts;
/// dBm only appears at the config boundary.
struct SystemParams {
    double rate_R = 1.0;              // bit/s/Hz
    double total_power_PB = 100.0;    // mW
    double power_ratio_k = 7.0 / 3.0; // P_F / P_N (NOMA)
    double power_fraction_rho = 0.5;  // P_F / P_B (OFDMA)
    double freq_fraction_theta = 0.5; // bandwidth share of user F (OFDMA)
    double eta = 0.5;
    double alpha = 2.0;
    double d_BN = 25.0;
    double d_BF = 35.0;
    double d_NF = 10.0;
    double lambda_BN = 1.0;
    double lambda_BF = 1.0;
    double lambda_NF = 1.0;
    double sigma2_N = 1e-5; // mW
    double sigma2_F = 1e-5; // mW

    /// 2^R - 1, the SINR needed to carry R bit/s/Hz on the full band.
    double sinr_target() const;

    // NOMA split from k. P_F is computed as P_B - P_N so the two sum to P_B exactly.
    double noma_power_N() const;
    double noma_power_F() const;

    // OFDMA split from rho.
    double ofdma_power_F() const;
    double ofdma_power_N() const;

    // Path-loss-scaled noise, d^alpha * sigma^2, at each receiver.
    double scaled_noise_N() const;
    double scaled_noise_F() const;
};

/// The defaults used for the published figures (R=1, P_B=20 dBm,
/// sigma^2=-50 dBm, eta=0.5, alpha=2, lambda=1, 35/25/10 m, k=7/3, rho=theta=0.5).
SystemParams figure_defaults();

double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

/// Checks every invariant that applies to `protocol` and returns the params
/// unchanged, or throws ValidationError naming the first violated field.
SystemParams validate(const SystemParams& params, Protocol protocol);

} // namespace swipt
