#include "swipt/special.hpp"

#include <cmath>
#include <limits>

#include <boost/math/special_functions/bessel.hpp>
#include <fmt/format.h>

#include "swipt/errors.hpp"

namespace swipt {

namespace {

constexpr double kPsiLimit = 1e-12;
constexpr double kEulerGamma = 0.57721566490153286061;

} // namespace

double bessel_k1(double t)
{
    if (!(t > 0.0)) throw DomainError(fmt::format("bessel_k1: argument must be > 0 (got {})", t));
    if (t < 1e-300) return 1.0 / t; // K1(t) ~ 1/t; may be inf
    if (t > 745.0) return 0.0;
    return boost::math::cyl_bessel_k(1, t);
}

double psi_k1(double psi)
{
    if (psi < kPsiLimit) return 1.0;
    if (psi > 745.0) return 0.0;
    return psi * bessel_k1(psi);
}

double one_minus_psi_k1(double psi)
{
    if (psi < kPsiLimit) return 0.0;
    if (psi > 1.0) return 1.0 - psi_k1(psi);

    // 1 - psi K1(psi) = sum_k u^(k+1) / (k! (k+1)!) [digamma(k+1) + digamma(k+2) - ln u],
    // u = psi^2 / 4. Every term is positive for u <= 1/4.
    const double u = 0.25 * psi * psi;
    const double log_u = std::log(u);
    double digamma_k1 = -kEulerGamma;      // digamma(1)
    double digamma_k2 = 1.0 - kEulerGamma; // digamma(2)
    double coeff = u;                      // u^(k+1) / (k! (k+1)!)
    double sum = 0.0;
    for (int k = 0; k < 30; ++k) {
        const double term = coeff * (digamma_k1 + digamma_k2 - log_u);
        sum += term;
        if (std::abs(term) <= std::numeric_limits<double>::epsilon() * sum) break;
        digamma_k1 += 1.0 / (k + 1);
        digamma_k2 += 1.0 / (k + 2);
        coeff *= u / ((k + 1.0) * (k + 2.0));
    }
    return sum;
}

} // namespace swipt
