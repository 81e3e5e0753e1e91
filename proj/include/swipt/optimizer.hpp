#pragma once

#include <limits>
#include <vector>

#include "swipt/analytic.hpp"
#include "swipt/params.hpp"

namespace swipt {

enum class OptBackend { Analytic, Efrc };

/// One allocation. NOMA uses k; ISAOC uses (rho, theta). Unused fields are NaN.
struct Allocation {
    double k = std::numeric_limits<double>::quiet_NaN();
    double rho = std::numeric_limits<double>::quiet_NaN();
    double theta = std::numeric_limits<double>::quiet_NaN();
};

struct SurfacePoint {
    Allocation alloc;
    OutageProbs outage; // op_N/op_F are NaN under the EFRC backend
};

struct OptimizationResult {
    Allocation best;
    OutageProbs best_outage;
    std::vector<SurfacePoint> surface; // valid points in ascending allocation order
    double best_sop() const { return best_outage.sop; }
};

struct OptOptions {
    OptBackend backend = OptBackend::Analytic;
    unsigned workers = 0;
    AnalyticOptions analytic{};
};

/// Exhaustive search over k for CSANC/ISANC. Grid points violating the NOMA
/// constraints are dropped; DomainError if none remain. Ties go to the smaller k.
OptimizationResult minimize_sop_noma(Protocol protocol, const SystemParams& params, std::vector<double> k_grid,
                                     OptOptions options = {});

/// Exhaustive search over rho x theta for ISAOC. Ties go to the smaller
/// (rho, theta) in lexicographic order.
OptimizationResult minimize_sop_isaoc(const SystemParams& params, std::vector<double> rho_grid,
                                      std::vector<double> theta_grid, OptOptions options = {});

/// Dispatches on protocol; `k_grid` is ignored for ISAOC and the other two for NOMA.
OptimizationResult minimize_sop(Protocol protocol, const SystemParams& params, const std::vector<double>& k_grid,
                                const std::vector<double>& rho_grid, const std::vector<double>& theta_grid,
                                OptOptions options = {});

} // namespace swipt
