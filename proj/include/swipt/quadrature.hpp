#pragma once

#include <functional>

namespace swipt {

struct QuadOptions {
    double rel_tol = 1e-9;
    double abs_tol = 0.0;
    unsigned max_depth = 60;        // bisection levels below [a, b]
    unsigned max_intervals = 20000; // total sub-intervals
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    unsigned intervals = 0;
};

/// Globally adaptive 15-point Gauss-Kronrod over [a, b]: the interval with
/// the largest error estimate is bisected until the summed estimate drops
/// to max(abs_tol, rel_tol * |I|). Endpoints are never evaluated, so
/// integrands only need to be finite on the open interval.
/// a == b gives 0; a > b is a DomainError. If the tolerance cannot be met
/// within max_depth / max_intervals, throws NumericError carrying the
/// estimate and its bound.
QuadResult integrate(const std::function<double(double)>& f, double a, double b, QuadOptions options = {});

} // namespace swipt
