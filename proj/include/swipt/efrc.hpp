#pragma once

#include "swipt/params.hpp"

namespace swipt {

// System outage with an error-free link between the users: whoever decodes
// both messages always delivers the other user's message.

/// P{NDN=0}: F is always rescued once N decodes both messages.
double efrc_sop_csanc(const SystemParams& params);
/// P{NDN=0} * P{FDN=0}.
double efrc_sop_isanc(const SystemParams& params);
/// (1 - P{FDF=1,FDN=1}) (1 - P{NDF=1,NDN=1}).
double efrc_sop_isaoc(const SystemParams& params);

struct IsancOptimum {
    double k = 0.0;
    double sop = 0.0;
};

struct IsaocOptimum {
    double theta = 0.0;
    double rho = 0.0;
    double sop = 0.0;
};

/// k = 2^R. `params.power_ratio_k` is ignored.
IsancOptimum efrc_optimal_isanc(const SystemParams& params);

/// theta = 1/2 with the power split that equalizes both users' per-noise
/// requirements; P_N = P_F at theta = 1/2. Allocation fields in `params` are ignored.
IsaocOptimum efrc_optimal_isaoc(const SystemParams& params);

/// Power split rho = P_F / P_B equalizing the two users' requirements at a given theta.
double efrc_balanced_rho(double R, double theta);

/// theta (2^(R/theta) - 1) + (1 - theta)(2^(R/(1-theta)) - 1), the total
/// per-noise power requirement under a balanced split.
double efrc_f(double theta, double R);

/// (1 - exp(-d_BN^a s_N (2^2R - 1)/(l_BN P_B))) (1 - exp(-d_BF^a s_F (2^2R - 1)/(l_BF P_B))),
/// the optimum shared by ISANC and ISAOC.
double efrc_optimal_sop_closed_form(const SystemParams& params);

} // namespace swipt
