#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "swipt/analytic.hpp"
#include "swipt/asymptotic.hpp"
#include "swipt/config.hpp"
#include "swipt/efrc.hpp"
#include "swipt/montecarlo.hpp"
#include "swipt/optimizer.hpp"
#include "swipt/report.hpp"

namespace swipt::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string config_path;
    std::vector<std::string> protocols;
    std::string format = "csv";
    std::string out;
    std::string preset;

    std::string axis;
    std::string grid;
    bool simulate = false;
    bool couple_d_NF = false;
    std::string backend = "analytic";
    bool surface = false;
    int points = 51;
};

struct Context {
    Config config;
    std::vector<Protocol> protocols;
    Options opts;
};

const std::vector<Protocol> kAllProtocols = {Protocol::Csanc, Protocol::Isanc, Protocol::Isaoc};

std::string name_of(Protocol p) { return std::string(to_string(p)); }

// ---- axes ---------------------------------------------------------------

std::string axis_column(const std::string& axis)
{
    if (axis == "P_B") return "P_B_dBm";
    return axis;
}

std::vector<double> axis_grid(const Context& ctx, const std::string& axis)
{
    if (!ctx.opts.grid.empty()) {
        try {
            return parse_grid(ctx.opts.grid, "--grid");
        } catch (const ValidationError& e) {
            throw UsageError(e.what());
        }
    }
    const SweepSettings& s = ctx.config.sweep;
    if (axis == "P_B") return s.P_B_dBm;
    if (axis == "d_BN") return s.d_BN;
    if (axis == "k") return s.k;
    if (axis == "theta") return s.theta;
    throw UsageError(fmt::format("unknown axis '{}'", axis));
}

bool axis_applies(const std::string& axis, Protocol p)
{
    if (axis == "k") return is_noma(p);
    if (axis == "theta") return p == Protocol::Isaoc;
    return true;
}

SystemParams at_axis(const Context& ctx, const std::string& axis, double v)
{
    SystemParams p = ctx.config.system;
    if (axis == "P_B") {
        p.total_power_PB = dbm_to_mw(v);
    } else if (axis == "d_BN") {
        p.d_BN = v;
        if (ctx.opts.couple_d_NF) {
            p.d_NF = p.d_BF - v;
            if (!(p.d_NF > 0.0))
                throw UsageError(fmt::format("d_BN = {} leaves no room for d_NF = d_BF - d_BN", v));
        }
    } else if (axis == "k") {
        p.power_ratio_k = v;
    } else if (axis == "theta") {
        p.freq_fraction_theta = v;
    }
    return p;
}

std::vector<Protocol> protocols_for(const Context& ctx, const std::string& axis)
{
    std::vector<Protocol> out;
    for (Protocol p : ctx.protocols)
        if (axis_applies(axis, p)) out.push_back(p);
    if (out.empty()) throw UsageError(fmt::format("axis '{}' does not apply to the selected protocols", axis));
    return out;
}

void check_point(const SystemParams& p, Protocol protocol, const std::string& axis, double v)
{
    try {
        validate(p, protocol);
    } catch (const ValidationError& e) {
        throw UsageError(fmt::format("grid value {} = {} is invalid for {}: {}", axis, v, to_string(protocol), e.what()));
    }
}

// ---- panels -------------------------------------------------------------

/// Wide table: one row per x, one column group per protocol.
struct Panel {
    Table table;
    std::map<double, std::vector<Cell>> rows;
    std::size_t width = 0;

    Panel(std::string name, std::vector<std::string> columns)
    {
        table.name = std::move(name);
        table.columns = std::move(columns);
        width = table.columns.size();
    }
    void set(double x, std::size_t col, Cell v)
    {
        auto& row = rows[x];
        if (row.empty()) {
            row.assign(width, Cell{kNaN});
            row[0] = x;
        }
        row[col] = std::move(v);
    }
    Table finish()
    {
        for (auto& [x, row] : rows) table.add_row(row);
        return std::move(table);
    }
};

// ---- commands -----------------------------------------------------------

void warn_low_count(const OutageEstimate& e, Protocol p, std::ostream& err)
{
    if (e.low_count())
        err << fmt::format("warning: {} has fewer than {} failures in some outage count; its CI is unreliable\n",
                           to_string(p), OutageEstimate::kReliableFailures);
}

std::vector<Table> cmd_simulate(const Context& ctx, std::ostream& err)
{
    const SimulationSettings& sim = ctx.config.simulation;
    Table t{"simulate",
            {"protocol", "P_B_dBm", "op_N", "op_F", "sop", "ci_N", "ci_F", "ci_sys", "failures_N", "failures_F",
             "failures_sys", "trials", "seed"},
            {}};
    for (Protocol p : ctx.protocols) {
        const OutageEstimate e = estimate(p, ctx.config.system, sim.trials, sim.seed, {sim.workers});
        warn_low_count(e, p, err);
        t.add_row({name_of(p), mw_to_dbm(ctx.config.system.total_power_PB), e.op_N, e.op_F, e.sop,
                   e.ci_half_width_N, e.ci_half_width_F, e.ci_half_width_sys,
                   static_cast<std::int64_t>(e.failures_N), static_cast<std::int64_t>(e.failures_F),
                   static_cast<std::int64_t>(e.failures_sys), static_cast<std::int64_t>(e.trials),
                   static_cast<std::int64_t>(sim.seed)});
    }
    return {t};
}

void add_event_rows(Table& t, const std::string& framework, const EventProbs& e)
{
    const std::vector<std::pair<const char*, double>> terms = {
        {"NDF=0", e.ndf0},
        {"FDF=0", e.fdf0},
        {"NDN=0", e.ndn0},
        {"FDN=0", e.fdn0},
        {"NDF=1,NDN=0", e.ndf1_ndn0},
        {"FDF=1,FDN=0", e.fdf1_fdn0},
        {"NDF=1,NDN=1", e.n_full},
        {"FDF=1,FDN=1", e.f_full},
        {"NHF=0,FDF=0,NDF=1,NDN=1", e.nhf_fail},
        {"FHN=0,NDF=0,FDF=1,FDN=1", e.fhn_fail_ndf0},
        {"FHN=0,NDF=1,NDN=0,FDF=1,FDN=1", e.fhn_fail_ndf1},
        {"FHN=0,NDN=0,FDF=1,FDN=1", e.fhn_fail},
    };
    for (const auto& [name, v] : terms) t.add_row({framework, std::string(name), v});
}

std::vector<Table> cmd_analytic(const Context& ctx)
{
    const SystemParams& s = ctx.config.system;
    Table t{"analytic", {"protocol", "P_B_dBm", "op_N", "op_F", "sop"}, {}};
    for (Protocol p : ctx.protocols) {
        const OutageProbs o = outage(p, s);
        t.add_row({name_of(p), mw_to_dbm(s.total_power_PB), o.op_N, o.op_F, o.sop});
    }
    Table events{"events", {"framework", "event", "probability"}, {}};
    const bool any_noma = std::any_of(ctx.protocols.begin(), ctx.protocols.end(), is_noma);
    const bool any_ofdma = std::any_of(ctx.protocols.begin(), ctx.protocols.end(),
                                       [](Protocol p) { return p == Protocol::Isaoc; });
    if (any_noma) add_event_rows(events, "noma", noma_event_probs(s));
    if (any_ofdma) add_event_rows(events, "ofdma", ofdma_event_probs(s));
    return {t, events};
}

struct SweepRecord {
    double x;
    Protocol protocol;
    OutageProbs an;
    std::optional<OutageEstimate> mc;
};

std::vector<Table> cmd_sweep(const Context& ctx, std::ostream& err, bool figure_panels)
{
    const std::string& axis = ctx.opts.axis;
    const std::vector<double> grid = axis_grid(ctx, axis);
    const std::vector<Protocol> protocols = protocols_for(ctx, axis);
    const SimulationSettings& sim = ctx.config.simulation;

    std::vector<SweepRecord> records;
    for (double x : grid) {
        for (Protocol p : protocols) {
            const SystemParams params = at_axis(ctx, axis, x);
            check_point(params, p, axis, x);
            SweepRecord r{x, p, outage(p, params), std::nullopt};
            if (ctx.opts.simulate) {
                r.mc = estimate(p, params, sim.trials, sim.seed, {sim.workers});
                warn_low_count(*r.mc, p, err);
            }
            records.push_back(r);
        }
    }

    if (figure_panels) {
        // One table per quantity, analytic and simulated side by side.
        std::vector<std::string> columns = {axis_column(axis)};
        for (Protocol p : protocols) {
            columns.push_back(name_of(p) + "_analytic");
            columns.push_back(name_of(p) + "_sim");
            columns.push_back(name_of(p) + "_sim_ci");
        }
        const std::vector<std::pair<std::string, int>> quantities = {{"sop", 2}, {"op_F", 1}, {"op_N", 0}};
        std::vector<Table> out;
        for (const auto& [q, which] : quantities) {
            Panel panel(ctx.opts.preset + "_" + q, columns);
            for (const SweepRecord& r : records) {
                const std::size_t col =
                    1 + 3 * static_cast<std::size_t>(std::find(protocols.begin(), protocols.end(), r.protocol) -
                                                     protocols.begin());
                const double an = which == 0 ? r.an.op_N : which == 1 ? r.an.op_F : r.an.sop;
                panel.set(r.x, col, an);
                if (r.mc) {
                    const OutageEstimate& m = *r.mc;
                    panel.set(r.x, col + 1, which == 0 ? m.op_N : which == 1 ? m.op_F : m.sop);
                    panel.set(r.x, col + 2,
                              which == 0 ? m.ci_half_width_N : which == 1 ? m.ci_half_width_F : m.ci_half_width_sys);
                }
            }
            out.push_back(panel.finish());
        }
        return out;
    }

    std::vector<std::string> columns = {axis_column(axis), "protocol", "op_N", "op_F", "sop"};
    if (ctx.opts.simulate)
        for (const char* c : {"mc_op_N", "mc_op_F", "mc_sop", "mc_ci_N", "mc_ci_F", "mc_ci_sys", "trials", "seed"})
            columns.emplace_back(c);
    Table t{"sweep_" + axis, columns, {}};
    for (const SweepRecord& r : records) {
        std::vector<Cell> row = {r.x, name_of(r.protocol), r.an.op_N, r.an.op_F, r.an.sop};
        if (r.mc) {
            const OutageEstimate& m = *r.mc;
            for (Cell c : std::vector<Cell>{m.op_N, m.op_F, m.sop, m.ci_half_width_N, m.ci_half_width_F,
                                            m.ci_half_width_sys, static_cast<std::int64_t>(m.trials),
                                            static_cast<std::int64_t>(sim.seed)})
                row.push_back(c);
        }
        t.add_row(std::move(row));
    }
    return {t};
}

OptBackend parse_backend(const std::string& s) { return s == "efrc" ? OptBackend::Efrc : OptBackend::Analytic; }

Table surface_table(Protocol p, const OptimizationResult& r)
{
    Table t{"surface_" + name_of(p), {"k", "rho", "theta", "op_N", "op_F", "sop"}, {}};
    for (const SurfacePoint& s : r.surface)
        t.add_row({s.alloc.k, s.alloc.rho, s.alloc.theta, s.outage.op_N, s.outage.op_F, s.outage.sop});
    return t;
}

std::vector<Table> cmd_optimize(const Context& ctx, bool figure_panels)
{
    const std::string axis = ctx.opts.axis.empty() ? "none" : ctx.opts.axis;
    if (axis != "none" && axis != "P_B" && axis != "d_BN")
        throw UsageError(fmt::format("optimize supports --axis none, P_B or d_BN (got '{}')", axis));
    const std::string grid_axis = axis == "none" ? "P_B" : axis;
    const std::vector<double> grid =
        axis == "none" ? std::vector<double>{mw_to_dbm(ctx.config.system.total_power_PB)} : axis_grid(ctx, axis);
    if (ctx.opts.surface && grid.size() != 1) throw UsageError("--surface needs a single operating point (--axis none)");

    OptOptions opt;
    opt.backend = parse_backend(ctx.opts.backend);
    opt.workers = ctx.config.simulation.workers;
    const SweepSettings& s = ctx.config.sweep;

    std::vector<Table> out;
    Table t{"optimize_" + axis, {axis_column(grid_axis), "protocol", "k", "rho", "theta", "op_N", "op_F", "sop"}, {}};
    const std::string prefix = ctx.opts.preset.empty() ? "optimize" : ctx.opts.preset;
    std::vector<std::string> wide = {axis_column(grid_axis)};
    for (Protocol p : ctx.protocols) wide.push_back(name_of(p));
    Panel sop(prefix + "_sop", wide), opF(prefix + "_op_F", wide), opN(prefix + "_op_N", wide);
    std::vector<std::string> alloc_cols = {axis_column(grid_axis)};
    for (Protocol p : ctx.protocols) {
        if (is_noma(p)) {
            alloc_cols.push_back(name_of(p) + "_k");
        } else {
            alloc_cols.push_back(name_of(p) + "_rho");
            alloc_cols.push_back(name_of(p) + "_theta");
        }
    }
    Panel alloc(prefix + "_allocation", alloc_cols);

    for (double x : grid) {
        const SystemParams params = at_axis(ctx, grid_axis, x);
        std::size_t col = 1, acol = 1;
        for (Protocol p : ctx.protocols) {
            const OptimizationResult r = minimize_sop(p, params, s.k, s.rho, s.theta, opt);
            t.add_row({x, name_of(p), r.best.k, r.best.rho, r.best.theta, r.best_outage.op_N, r.best_outage.op_F,
                       r.best_outage.sop});
            sop.set(x, col, r.best_outage.sop);
            opF.set(x, col, r.best_outage.op_F);
            opN.set(x, col, r.best_outage.op_N);
            ++col;
            if (is_noma(p)) {
                alloc.set(x, acol++, r.best.k);
            } else {
                alloc.set(x, acol++, r.best.rho);
                alloc.set(x, acol++, r.best.theta);
            }
            if (ctx.opts.surface) out.push_back(surface_table(p, r));
        }
    }
    if (figure_panels) {
        out.insert(out.begin(), {sop.finish(), opF.finish(), opN.finish(), alloc.finish()});
    } else {
        out.insert(out.begin(), t);
    }
    return out;
}

std::vector<Table> cmd_dmt(const Context& ctx)
{
    struct Case {
        Protocol protocol;
        DmtSetting setting;
    };
    std::vector<Case> cases;
    for (Protocol p : {Protocol::Csanc, Protocol::Isanc}) {
        cases.push_back({p, {2.0, 0.0, kNaN, false}});
        cases.push_back({p, {1.0, 1.0, kNaN, false}});
    }
    // Equal split, the two skewed allocations, and the two mismatched ones.
    for (const auto& [theta, binds] :
         std::vector<std::pair<double, bool>>{{0.5, false}, {0.3, true}, {0.7, false}, {0.3, false}, {0.7, true}})
        cases.push_back({Protocol::Isaoc, {kNaN, kNaN, theta, binds}});

    Table curve{"dmt", {"protocol", "user", "a", "b", "theta", "own_N_binds", "r", "d"}, {}};
    Table summary{"dmt_amg", {"protocol", "user", "a", "b", "theta", "own_N_binds", "diversity_at_0", "amg"}, {}};
    for (const Case& c : cases) {
        if (std::find(ctx.protocols.begin(), ctx.protocols.end(), c.protocol) == ctx.protocols.end()) continue;
        for (User u : {User::N, User::F}) {
            const DmtCurve dc = dmt_curve(c.protocol, u, c.setting, ctx.opts.points);
            const std::int64_t binds = c.setting.own_N_binds ? 1 : 0;
            for (const auto& [r, d] : dc.samples)
                curve.add_row({name_of(c.protocol), std::string(to_string(u)), c.setting.a, c.setting.b,
                               c.setting.theta, binds, r, d});
            summary.add_row({name_of(c.protocol), std::string(to_string(u)), c.setting.a, c.setting.b,
                             c.setting.theta, binds, dmt(c.protocol, u, 0.0, c.setting),
                             achievable_multiplexing_gain(c.protocol, u, c.setting)});
        }
    }

    const SystemParams& s = ctx.config.system;
    Table n{"nse", {"user", "P_B_dBm", "r"}, {}};
    n.add_row({std::string("N"), mw_to_dbm(s.total_power_PB),
               nse(s.rate_R, s.total_power_PB, s.lambda_BN, s.d_BN, s.sigma2_N, s.alpha)});
    n.add_row({std::string("F"), mw_to_dbm(s.total_power_PB),
               nse(s.rate_R, s.total_power_PB, s.lambda_BF, s.d_BF, s.sigma2_F, s.alpha)});
    return {curve, summary, n};
}

std::vector<Table> cmd_efrc(const Context& ctx)
{
    const SystemParams& base = ctx.config.system;
    const double c = base.sinr_target();
    OptOptions opt;
    opt.backend = OptBackend::Efrc;
    opt.workers = ctx.config.simulation.workers;

    Table t{"efrc", {"k", "csanc_sop", "isanc_sop", "isaoc_rho", "isaoc_best_theta", "isaoc_sop"}, {}};
    for (double k : ctx.config.sweep.k) {
        if (!(k > c)) throw UsageError(fmt::format("k grid value {} must exceed 2^R - 1 = {}", k, c));
        SystemParams p = base;
        p.power_ratio_k = k;
        check_point(p, Protocol::Isanc, "k", k);
        // Same P_F / P_N ratio for the OFDMA split.
        const double rho = k / (1.0 + k);
        const OptimizationResult best = minimize_sop_isaoc(base, {rho}, ctx.config.sweep.theta, opt);
        t.add_row({k, efrc_sop_csanc(p), efrc_sop_isanc(p), rho, best.best.theta, best.best_sop()});
    }

    const IsancOptimum ni = efrc_optimal_isanc(base);
    const IsaocOptimum oi = efrc_optimal_isaoc(base);
    const double closed = efrc_optimal_sop_closed_form(base);
    Table opt_table{"efrc_optimum", {"protocol", "k", "rho", "theta", "sop", "closed_form"}, {}};
    opt_table.add_row({std::string("isanc"), ni.k, kNaN, kNaN, ni.sop, closed});
    opt_table.add_row({std::string("isaoc"), kNaN, oi.rho, oi.theta, oi.sop, closed});
    return {t, opt_table};
}

// ---- output -------------------------------------------------------------

void emit(const std::vector<Table>& tables, const Context& ctx, std::ostream& out)
{
    const Meta meta = {{"config_hash", config_hash(ctx.config)},
                       {"seed", std::to_string(ctx.config.simulation.seed)}};
    const std::string& path = ctx.opts.out;

    if (ctx.opts.format == "json") {
        if (path.empty()) {
            write_json(out, tables, meta);
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw UsageError(fmt::format("cannot write '{}'", path));
        write_json(f, tables, meta);
        return;
    }

    if (path.empty()) {
        for (std::size_t i = 0; i < tables.size(); ++i) {
            if (i) out << '\n';
            write_csv(out, tables[i], meta);
        }
        return;
    }
    if (tables.size() == 1) {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw UsageError(fmt::format("cannot write '{}'", path));
        write_csv(f, tables[0], meta);
        return;
    }
    // Several tables: --out names a directory.
    std::filesystem::create_directories(path);
    for (const Table& t : tables) {
        const auto file = std::filesystem::path(path) / (t.name + ".csv");
        std::ofstream f(file, std::ios::binary);
        if (!f) throw UsageError(fmt::format("cannot write '{}'", file.string()));
        write_csv(f, t, meta);
    }
}

struct Preset {
    std::string command;
    std::string axis;
    bool simulate = false;
    bool couple_d_NF = false;
};

const std::map<std::string, Preset>& presets()
{
    static const std::map<std::string, Preset> table = {
        {"fig2", {"sweep", "P_B", true, false}},
        {"fig3", {"optimize", "P_B", false, false}},
        {"fig4", {"optimize", "d_BN", false, true}},
        {"fig5", {"dmt", "", false, false}},
        {"fig6", {"efrc", "", false, false}},
    };
    return table;
}

int dispatch(const std::string& command, Context& ctx, std::ostream& out, std::ostream& err)
{
    const bool panels = !ctx.opts.preset.empty();
    std::vector<Table> tables;
    if (command == "simulate")
        tables = cmd_simulate(ctx, err);
    else if (command == "analytic")
        tables = cmd_analytic(ctx);
    else if (command == "sweep")
        tables = cmd_sweep(ctx, err, panels);
    else if (command == "optimize")
        tables = cmd_optimize(ctx, panels);
    else if (command == "dmt")
        tables = cmd_dmt(ctx);
    else if (command == "efrc")
        tables = cmd_efrc(ctx);
    else
        throw UsageError(fmt::format("unknown command '{}'", command));
    emit(tables, ctx, out);
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Outage analysis and simulation for SWIPT-assisted two-user cooperation (CSANC, ISANC, ISAOC)",
                 "swipt_cli"};
    app.fallthrough();
    app.require_subcommand(0, 1);

    Options o;
    std::uint64_t trials = 0, seed = 0;
    unsigned workers = 0;
    app.add_option("--config", o.config_path, "INI config file")->check(CLI::ExistingFile);
    app.add_option("--protocol", o.protocols, "csanc, isanc, isaoc or all (comma separated)")
        ->delimiter(',')
        ->check(CLI::IsMember({"csanc", "isanc", "isaoc", "all"}));
    auto* trials_opt =
        app.add_option("--trials", trials, "Monte Carlo trials per point")->check(CLI::PositiveNumber);
    auto* seed_opt = app.add_option("--seed", seed, "Monte Carlo seed");
    auto* workers_opt = app.add_option("--workers", workers, "worker threads (0 = all cores)");
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", o.out, "output file, or directory when a command writes several tables");
    app.add_option("--preset", o.preset, "figure preset")->check(CLI::IsMember({"fig2", "fig3", "fig4", "fig5", "fig6"}));

    app.add_subcommand("simulate", "Monte Carlo outage estimate at the configured operating point");
    app.add_subcommand("analytic", "closed-form outage and event probabilities");
    auto* sweep = app.add_subcommand("sweep", "outage versus one parameter");
    sweep->add_option("--axis", o.axis, "swept parameter")->check(CLI::IsMember({"P_B", "d_BN", "k", "theta"}));
    sweep->add_option("--grid", o.grid, "start:step:end or comma list (default from config)");
    sweep->add_flag("--simulate", o.simulate, "add Monte Carlo columns");
    sweep->add_flag("--couple-d-NF", o.couple_d_NF, "keep d_NF = d_BF - d_BN while sweeping d_BN");
    auto* optimize = app.add_subcommand("optimize", "grid search for the allocation minimizing SOP");
    optimize->add_option("--axis", o.axis, "repeat the search along this parameter")
        ->check(CLI::IsMember({"none", "P_B", "d_BN"}));
    optimize->add_option("--grid", o.grid, "start:step:end or comma list for --axis");
    optimize->add_option("--backend", o.backend, "outage model")->check(CLI::IsMember({"analytic", "efrc"}));
    optimize->add_flag("--couple-d-NF", o.couple_d_NF, "keep d_NF = d_BF - d_BN while sweeping d_BN");
    optimize->add_flag("--surface", o.surface, "also emit every evaluated grid point");
    auto* dmt_cmd = app.add_subcommand("dmt", "diversity-multiplexing trade-off curves");
    dmt_cmd->add_option("--points", o.points, "samples per curve")->check(CLI::Range(2, 100000));
    app.add_subcommand("efrc", "error-free relaying limit: SOP versus k and the optimal allocations");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        std::string command;
        if (!app.get_subcommands().empty()) command = app.get_subcommands().front()->get_name();

        if (!o.preset.empty()) {
            const Preset& pr = presets().at(o.preset);
            if (command.empty()) command = pr.command;
            if (command != pr.command)
                throw UsageError(fmt::format("preset {} runs '{}', not '{}'", o.preset, pr.command, command));
            if (o.axis.empty()) o.axis = pr.axis;
            o.simulate = o.simulate || pr.simulate;
            o.couple_d_NF = o.couple_d_NF || pr.couple_d_NF;
        }
        if (command.empty()) throw UsageError("a command or --preset is required (see --help)");
        if (command == "sweep" && o.axis.empty()) throw UsageError("sweep needs --axis");
        if (!o.grid.empty() && (o.axis.empty() || o.axis == "none")) throw UsageError("--grid needs --axis");

        Context ctx;
        ctx.config = o.config_path.empty() ? default_config() : load_config(o.config_path);
        if (*trials_opt) ctx.config.simulation.trials = trials;
        if (*seed_opt) ctx.config.simulation.seed = seed;
        if (*workers_opt) ctx.config.simulation.workers = workers;
        if (ctx.config.simulation.trials < 1) throw ValidationError("simulation.trials", "must be >= 1");

        const bool all = o.protocols.empty() ||
                         std::find(o.protocols.begin(), o.protocols.end(), "all") != o.protocols.end();
        if (all) {
            ctx.protocols = kAllProtocols;
        } else {
            for (Protocol p : kAllProtocols)
                if (std::find(o.protocols.begin(), o.protocols.end(), name_of(p)) != o.protocols.end())
                    ctx.protocols.push_back(p);
        }
        ctx.opts = o;
        return dispatch(command, ctx, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ValidationError& e) {
        err << "invalid parameter: " << e.what() << '\n';
        return kValidation;
    } catch (const DomainError& e) {
        err << "invalid parameter: " << e.what() << '\n';
        return kValidation;
    } catch (const NumericError& e) {
        err << fmt::format("numeric failure: {} (best estimate {:.6g}, error bound {:.3g})\n", e.what(),
                           e.best_estimate(), e.error_bound());
        return kNumeric;
    } catch (const RangeError& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kNumeric;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace swipt::cli
