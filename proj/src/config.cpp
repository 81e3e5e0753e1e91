#include "swipt/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

namespace swipt {

namespace pt = boost::property_tree;

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

double parse_double(std::string_view text, const std::string& field)
{
    text = trim(text);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(v))
        throw ValidationError(field, fmt::format("'{}' is not a finite number", text));
    return v;
}

std::uint64_t parse_uint(std::string_view text, const std::string& field)
{
    text = trim(text);
    std::uint64_t v = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || end != text.data() + text.size())
        throw ValidationError(field, fmt::format("'{}' is not a non-negative integer", text));
    return v;
}

std::string grid_text(const std::vector<double>& g)
{
    std::string out;
    for (std::size_t i = 0; i < g.size(); ++i) out += fmt::format("{}{:.17g}", i ? "," : "", g[i]);
    return out;
}

} // namespace

std::vector<double> make_grid(double a, double step, double b, const std::string& field)
{
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(step) || !(step > 0.0))
        throw ValidationError(field, "grid needs finite bounds and a positive step");
    if (b < a) throw ValidationError(field, fmt::format("grid end {} is below its start {}", b, a));

    const double span = (b - a) / step;
    const long n = std::lround(span);
    if (std::abs(span - static_cast<double>(n)) > 1e-6 * std::max(1.0, span))
        throw ValidationError(field, fmt::format("step {} does not divide [{}, {}]", step, a, b));
    if (n > 10'000'000) throw ValidationError(field, "grid has more than 10^7 points");

    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n + 1));
    const double inv = 1.0 / step;
    const double N = std::round(inv);
    const double a_units = a * N;
    const bool unit_fraction = std::abs(inv - N) < 1e-9 * N && std::abs(a_units - std::round(a_units)) < 1e-6;
    for (long i = 0; i <= n; ++i) {
        if (unit_fraction)
            out.push_back((std::round(a_units) + static_cast<double>(i)) / N);
        else
            out.push_back(i == n ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(n));
    }
    return out;
}

std::vector<double> parse_grid(std::string_view text, const std::string& field)
{
    text = trim(text);
    if (text.empty()) throw ValidationError(field, "empty grid");
    if (text.find(':') != std::string_view::npos) {
        const auto first = text.find(':');
        const auto second = text.find(':', first + 1);
        if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos)
            throw ValidationError(field, fmt::format("'{}' is not of the form start:step:end", text));
        return make_grid(parse_double(text.substr(0, first), field),
                         parse_double(text.substr(first + 1, second - first - 1), field),
                         parse_double(text.substr(second + 1), field), field);
    }
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto end = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(parse_double(text.substr(pos, end - pos), field));
        pos = end + 1;
    }
    return out;
}

Config default_config()
{
    Config c;
    c.sweep.P_B_dBm = make_grid(0.0, 5.0, 40.0);
    c.sweep.d_BN = make_grid(5.0, 5.0, 30.0);
    c.sweep.k = make_grid(1.01, 0.01, 6.0);
    c.sweep.rho = make_grid(0.01, 0.01, 0.99);
    c.sweep.theta = make_grid(0.01, 0.01, 0.99);
    return c;
}

Config parse_config(std::istream& in)
{
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ValidationError("config", fmt::format("line {}: {}", e.line(), e.message()));
    }

    Config c = default_config();
    SystemParams& s = c.system;
    using Setter = std::function<void(const std::string&, const std::string&)>;
    const auto num = [](double& dst) {
        return Setter([&dst](const std::string& key, const std::string& v) { dst = parse_double(v, key); });
    };
    const auto dbm = [](double& dst) {
        return Setter([&dst](const std::string& key, const std::string& v) { dst = dbm_to_mw(parse_double(v, key)); });
    };
    const auto grid = [](std::vector<double>& dst) {
        return Setter([&dst](const std::string& key, const std::string& v) { dst = parse_grid(v, key); });
    };

    const std::map<std::string, std::map<std::string, Setter>> schema = {
        {"system",
         {{"R", num(s.rate_R)},
          {"P_B_dBm", dbm(s.total_power_PB)},
          {"sigma2_N_dBm", dbm(s.sigma2_N)},
          {"sigma2_F_dBm", dbm(s.sigma2_F)},
          {"eta", num(s.eta)},
          {"alpha", num(s.alpha)},
          {"d_BN", num(s.d_BN)},
          {"d_BF", num(s.d_BF)},
          {"d_NF", num(s.d_NF)},
          {"lambda_BN", num(s.lambda_BN)},
          {"lambda_BF", num(s.lambda_BF)},
          {"lambda_NF", num(s.lambda_NF)}}},
        {"noma", {{"k", num(s.power_ratio_k)}}},
        {"isaoc", {{"rho", num(s.power_fraction_rho)}, {"theta", num(s.freq_fraction_theta)}}},
        {"simulation",
         {{"trials",
           [&](const std::string& key, const std::string& v) {
               c.simulation.trials = parse_uint(v, key);
               if (c.simulation.trials < 1) throw ValidationError(key, "must be >= 1");
           }},
          {"seed", [&](const std::string& key, const std::string& v) { c.simulation.seed = parse_uint(v, key); }},
          {"workers",
           [&](const std::string& key, const std::string& v) {
               const std::uint64_t w = parse_uint(v, key);
               if (w > 4096) throw ValidationError(key, "at most 4096 workers");
               c.simulation.workers = static_cast<unsigned>(w);
           }}}},
        {"sweep",
         {{"P_B_dBm", grid(c.sweep.P_B_dBm)},
          {"d_BN", grid(c.sweep.d_BN)},
          {"k", grid(c.sweep.k)},
          {"rho", grid(c.sweep.rho)},
          {"theta", grid(c.sweep.theta)}}},
    };

    for (const auto& [section, keys] : tree) {
        const auto sec = schema.find(section);
        if (sec == schema.end() || !keys.data().empty())
            throw ValidationError("config", fmt::format("unknown section or top-level key '{}'", section));
        for (const auto& [key, value] : keys) {
            const auto setter = sec->second.find(key);
            if (setter == sec->second.end())
                throw ValidationError("config", fmt::format("unknown key '{}' in [{}]", key, section));
            setter->second(section + "." + key, value.data());
        }
    }
    return c;
}

Config load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ValidationError("config", fmt::format("cannot open '{}'", path));
    return parse_config(in);
}

std::string canonical_text(const Config& c)
{
    const SystemParams& s = c.system;
    std::string out;
    const auto put = [&out](std::string_view key, double v) { out += fmt::format("{}={:.17g}\n", key, v); };
    put("R", s.rate_R);
    put("P_B_mW", s.total_power_PB);
    put("k", s.power_ratio_k);
    put("rho", s.power_fraction_rho);
    put("theta", s.freq_fraction_theta);
    put("eta", s.eta);
    put("alpha", s.alpha);
    put("d_BN", s.d_BN);
    put("d_BF", s.d_BF);
    put("d_NF", s.d_NF);
    put("lambda_BN", s.lambda_BN);
    put("lambda_BF", s.lambda_BF);
    put("lambda_NF", s.lambda_NF);
    put("sigma2_N_mW", s.sigma2_N);
    put("sigma2_F_mW", s.sigma2_F);
    out += fmt::format("trials={}\nseed={}\n", c.simulation.trials, c.simulation.seed);
    out += "grid.P_B_dBm=" + grid_text(c.sweep.P_B_dBm) + "\n";
    out += "grid.d_BN=" + grid_text(c.sweep.d_BN) + "\n";
    out += "grid.k=" + grid_text(c.sweep.k) + "\n";
    out += "grid.rho=" + grid_text(c.sweep.rho) + "\n";
    out += "grid.theta=" + grid_text(c.sweep.theta) + "\n";
    return out;
}

std::string config_hash(const Config& config)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const unsigned char ch : canonical_text(config)) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return fmt::format("{:016x}", h);
}

} // namespace swipt
