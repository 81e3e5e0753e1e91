#pragma once

#include <cmath>
#include <random>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "swipt/params.hpp"

namespace swipt::test {

using Big = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<80>>;

// K1 by the ascending series (small t) and the Hankel asymptotic series
// (large t), both in 80-digit arithmetic.
inline Big k1_ascending(const Big& t)
{
    using boost::multiprecision::log;
    const Big q = t * t / 4;
    const Big gamma = boost::math::constants::euler<Big>();
    Big term = 1;  // q^k / (k! (k+1)!)
    Big h_k = 0;   // harmonic number H_k
    Big h_k1 = 1;  // H_{k+1}
    Big i1_sum = 0;
    Big psi_sum = 0;
    for (int k = 0; k < 400; ++k) {
        i1_sum += term;
        const Big contrib = term * (h_k + h_k1 - 2 * gamma);
        psi_sum += contrib;
        if (k > 5 && abs(term) < Big("1e-75") * abs(i1_sum)) break;
        term *= q / ((k + 1) * Big(k + 2));
        h_k += Big(1) / (k + 1);
        h_k1 += Big(1) / (k + 2);
    }
    const Big i1 = t / 2 * i1_sum;
    return 1 / t + log(t / 2) * i1 - t / 4 * psi_sum;
}

inline Big k1_asymptotic(const Big& t)
{
    using boost::multiprecision::exp;
    using boost::multiprecision::sqrt;
    const Big pi = boost::math::constants::pi<Big>();
    Big term = 1;
    Big sum = 1;
    Big prev = 1;
    for (int k = 1; k < 200; ++k) {
        const Big odd = 2 * k - 1;
        term *= (4 - odd * odd) / (k * 8 * t);
        if (abs(term) > abs(prev)) break; // optimal truncation
        sum += term;
        prev = term;
        if (abs(term) < Big("1e-40") * abs(sum)) break;
    }
    return sqrt(pi / (2 * t)) * exp(-t) * sum;
}

inline double k1_oracle(double t)
{
    const Big bt = t;
    const Big v = t < 25.0 ? k1_ascending(bt) : k1_asymptotic(bt);
    return static_cast<double>(v);
}

// Parameters valid for every protocol, spread over the scenario space.
inline SystemParams random_params(std::mt19937_64& rng)
{
    auto u = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
    SystemParams p;
    p.rate_R = u(0.5, 1.5);
    const double c = std::exp2(p.rate_R) - 1.0;
    p.power_ratio_k = c * u(1.1, 4.0) + u(0.0, 1.0);
    p.power_fraction_rho = u(0.2, 0.8);
    p.freq_fraction_theta = u(0.3, 0.7);
    p.total_power_PB = dbm_to_mw(u(5.0, 30.0));
    p.eta = u(0.2, 1.0);
    p.alpha = u(2.0, 3.0);
    p.d_BN = u(5.0, 30.0);
    p.d_BF = p.d_BN + u(5.0, 20.0);
    p.d_NF = u(5.0, 30.0);
    p.lambda_BN = u(0.5, 2.0);
    p.lambda_BF = u(0.5, 2.0);
    p.lambda_NF = u(0.5, 2.0);
    p.sigma2_N = dbm_to_mw(u(-60.0, -40.0));
    p.sigma2_F = dbm_to_mw(u(-60.0, -40.0));
    return p;
}

inline double rel_diff(double a, double b)
{
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

} // namespace swipt::test
