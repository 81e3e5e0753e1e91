#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "swipt/params.hpp"

namespace swipt {

struct SimulationSettings {
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 1;
    unsigned workers = 0; // 0 = all hardware threads
};

/// Grids used by sweep/optimize/efrc commands.
struct SweepSettings {
    std::vector<double> P_B_dBm;
    std::vector<double> d_BN;
    std::vector<double> k;
    std::vector<double> rho;
    std::vector<double> theta;
};

struct Config {
    SystemParams system = figure_defaults();
    SimulationSettings simulation{};
    SweepSettings sweep{};
};

/// Figure defaults plus the default sweep grids.
Config default_config();

/// INI file with sections [system], [noma], [isaoc], [simulation], [sweep].
/// Powers are given in dBm. Keys not present keep their defaults; unknown
/// keys are a ValidationError so typos do not pass silently.
Config load_config(const std::string& path);
Config parse_config(std::istream& in);

/// Stable text form of every setting; the hash below is taken over it.
std::string canonical_text(const Config& config);
/// 16 hex digits of FNV-1a over canonical_text.
std::string config_hash(const Config& config);

/// Inclusive grid a, a+step, ..., b. Values are formed as a + i*(b-a)/n
/// with n = round((b-a)/step), or as integer/N when step = 1/N, so
/// 0.5 on a 0.01 grid is exactly 0.5. Throws ValidationError(field) on bad input.
std::vector<double> make_grid(double a, double step, double b, const std::string& field = "grid");

/// "a:step:b" or a comma-separated list.
std::vector<double> parse_grid(std::string_view text, const std::string& field = "grid");

} // namespace swipt
