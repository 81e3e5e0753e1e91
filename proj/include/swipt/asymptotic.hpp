#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "swipt/analytic.hpp"
#include "swipt/params.hpp"

namespace swipt {

/// Leading-order high-power forms of the event probabilities. IT-phase
/// terms decay as 1/P_B, relay-failure terms as log(P_B)/P_B^2. The
/// complement terms n_full/f_full are reported as 1 - (leading term of
/// their complement).
EventProbs highsnr_noma_event_probs(const SystemParams& params, AnalyticOptions options = {});
EventProbs highsnr_ofdma_event_probs(const SystemParams& params);

enum class SlopeBackend { Analytic, MonteCarlo };

struct SlopeOptions {
    SlopeBackend backend = SlopeBackend::Analytic;
    std::uint64_t trials = 10'000'000; // Monte Carlo only
    std::uint64_t seed = 1;
    unsigned workers = 0;
};

struct DiversitySlopes {
    double N = 0.0;
    double F = 0.0;
    double sys = 0.0;
};

/// Least-squares slope of -log10(OP) against log10(P_B) over a P_B grid in
/// dBm. Needs at least two distinct points; throws RangeError if any OP is 0.
DiversitySlopes diversity_slope(Protocol protocol, const SystemParams& params, const std::vector<double>& pb_grid_dBm,
                                SlopeOptions options = {});

/// Normalized spectral efficiency R / log2(1 + P_B lambda / (d^alpha sigma2)).
double nse(double R, double P_B, double lambda, double d, double sigma2, double alpha);

/// k = a (2^R - 1) + b for NOMA; theta and the ISAOC regime (x_N binding,
/// see OfdmaThresholds::own_N_binds) for OFDMA.
struct DmtSetting {
    double a = 2.0;
    double b = 0.0;
    double theta = 0.5;
    bool own_N_binds = false;
};

/// Diversity at multiplexing gain r, clamped at 0. Throws DomainError for
/// r < 0, an invalid (a, b) pair under NOMA, or theta outside (0, 1).
double dmt(Protocol protocol, User user, double r, const DmtSetting& setting);

/// Largest r with positive diversity.
double achievable_multiplexing_gain(Protocol protocol, User user, const DmtSetting& setting);

struct DmtCurve {
    Protocol protocol = Protocol::Csanc;
    User user = User::N;
    DmtSetting setting{};
    std::vector<std::pair<double, double>> samples; // (r, d)
};

/// `points` evenly spaced samples on r in [0, AMG].
DmtCurve dmt_curve(Protocol protocol, User user, const DmtSetting& setting, int points = 51);

} // namespace swipt
