#include "swipt/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/format.h>

#include "swipt/errors.hpp"

namespace swipt {

namespace {

struct Segment {
    double a, b;
    double value, error;
    unsigned depth;
    bool operator<(const Segment& o) const { return error < o.error; }
};

// One GK15 panel. Error is |K15 - G7| floored at the roundoff level of the panel.
Segment panel(const std::function<double(double)>& f, double a, double b, unsigned depth)
{
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    using G = boost::math::quadrature::gauss<double, 7>;
    const auto& x = GK::abscissa();
    const auto& wk = GK::weights();
    const auto& wg = G::weights();

    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    double kronrod = f0 * wk[0];
    double gauss = f0 * wg[0]; // G7 nodes are the even-indexed Kronrod nodes
    double abs_sum = std::abs(kronrod);
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double fp = f(mid + half * x[i]);
        const double fm = f(mid - half * x[i]);
        kronrod += (fp + fm) * wk[i];
        abs_sum += (std::abs(fp) + std::abs(fm)) * wk[i];
        if (i % 2 == 0) gauss += (fp + fm) * wg[i / 2];
    }
    const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * abs_sum * half;
    return {a, b, kronrod * half, std::max(std::abs(kronrod - gauss) * half, roundoff), depth};
}

} // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b, QuadOptions options)
{
    if (!std::isfinite(a) || !std::isfinite(b))
        throw DomainError(fmt::format("integrate: bounds must be finite (got [{}, {}])", a, b));
    if (a > b) throw DomainError(fmt::format("integrate: lower bound {} exceeds upper bound {}", a, b));
    if (a == b) return {};

    std::priority_queue<Segment> open;
    std::vector<Segment> frozen; // at max depth, or too narrow to split
    open.push(panel(f, a, b, 0));
    double value = open.top().value;
    double error = open.top().error;
    unsigned count = 1;

    const auto converged = [&] { return error <= std::max(options.abs_tol, options.rel_tol * std::abs(value)); };
    while (!converged()) {
        if (!std::isfinite(value)) break;
        if (open.empty() || count >= options.max_intervals) break;
        const Segment s = open.top();
        open.pop();
        const double mid = 0.5 * (s.a + s.b);
        if (s.depth >= options.max_depth || !(mid > s.a && mid < s.b)) {
            frozen.push_back(s);
            continue;
        }
        const Segment left = panel(f, s.a, mid, s.depth + 1);
        const Segment right = panel(f, mid, s.b, s.depth + 1);
        value += left.value + right.value - s.value;
        error += left.error + right.error - s.error;
        open.push(left);
        open.push(right);
        ++count;
    }

    // Re-sum from the pieces so the running updates leave no drift.
    double v = 0.0, e = 0.0;
    for (const Segment& s : frozen) {
        v += s.value;
        e += s.error;
    }
    while (!open.empty()) {
        v += open.top().value;
        e += open.top().error;
        open.pop();
    }
    if (!std::isfinite(v)) throw NumericError(fmt::format("integrate: non-finite result on [{}, {}]", a, b), v, e);
    const double allowed = std::max(options.abs_tol, options.rel_tol * std::abs(v));
    if (e > allowed)
        throw NumericError(fmt::format("integrate: error estimate {:.3g} above tolerance {:.3g} on [{}, {}] after {} "
                                       "intervals",
                                       e, allowed, a, b, count),
                           v, e);
    return {v, e, count};
}

} // namespace swipt
