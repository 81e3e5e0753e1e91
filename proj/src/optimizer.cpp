#include "swipt/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include <fmt/format.h>

#include "swipt/efrc.hpp"
#include "swipt/parallel.hpp"

namespace swipt {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> sorted_unique(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

OutageProbs evaluate(Protocol protocol, const SystemParams& p, const OptOptions& options)
{
    if (options.backend == OptBackend::Analytic) return outage(protocol, p, options.analytic);
    switch (protocol) {
    case Protocol::Csanc: return {kNaN, kNaN, efrc_sop_csanc(p)};
    case Protocol::Isanc: return {kNaN, kNaN, efrc_sop_isanc(p)};
    case Protocol::Isaoc: return {kNaN, kNaN, efrc_sop_isaoc(p)};
    }
    return {};
}

/// Evaluates every candidate in parallel, keeps the valid ones in order and
/// picks the first strict minimum.
OptimizationResult search(Protocol protocol, const std::vector<SystemParams>& candidates,
                          const std::vector<Allocation>& allocs, const OptOptions& options)
{
    std::vector<std::optional<OutageProbs>> values(candidates.size());
    parallel_for(candidates.size(), options.workers, [&](std::size_t i) {
        try {
            validate(candidates[i], protocol);
        } catch (const ValidationError&) {
            return;
        }
        values[i] = evaluate(protocol, candidates[i], options);
    });

    OptimizationResult result;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!values[i]) continue;
        result.surface.push_back({allocs[i], *values[i]});
        if (result.surface.size() == 1 || values[i]->sop < result.best_outage.sop) {
            result.best = allocs[i];
            result.best_outage = *values[i];
        }
    }
    if (result.surface.empty())
        throw DomainError(fmt::format("minimize_sop: no valid allocation in the grid for {}", to_string(protocol)));
    return result;
}

} // namespace

OptimizationResult minimize_sop_noma(Protocol protocol, const SystemParams& params, std::vector<double> k_grid,
                                     OptOptions options)
{
    if (!is_noma(protocol)) throw DomainError("minimize_sop_noma: protocol must be csanc or isanc");
    k_grid = sorted_unique(std::move(k_grid));
    std::vector<SystemParams> candidates;
    std::vector<Allocation> allocs;
    for (double k : k_grid) {
        SystemParams p = params;
        p.power_ratio_k = k;
        candidates.push_back(p);
        allocs.push_back({k, kNaN, kNaN});
    }
    return search(protocol, candidates, allocs, options);
}

OptimizationResult minimize_sop_isaoc(const SystemParams& params, std::vector<double> rho_grid,
                                      std::vector<double> theta_grid, OptOptions options)
{
    rho_grid = sorted_unique(std::move(rho_grid));
    theta_grid = sorted_unique(std::move(theta_grid));
    std::vector<SystemParams> candidates;
    std::vector<Allocation> allocs;
    for (double rho : rho_grid) {
        for (double theta : theta_grid) {
            SystemParams p = params;
            p.power_fraction_rho = rho;
            p.freq_fraction_theta = theta;
            candidates.push_back(p);
            allocs.push_back({kNaN, rho, theta});
        }
    }
    return search(Protocol::Isaoc, candidates, allocs, options);
}

OptimizationResult minimize_sop(Protocol protocol, const SystemParams& params, const std::vector<double>& k_grid,
                                const std::vector<double>& rho_grid, const std::vector<double>& theta_grid,
                                OptOptions options)
{
    if (is_noma(protocol)) return minimize_sop_noma(protocol, params, k_grid, options);
    return minimize_sop_isaoc(params, rho_grid, theta_grid, options);
}

} // namespace swipt
