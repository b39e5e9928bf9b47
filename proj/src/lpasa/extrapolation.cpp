#include "extrapolation.hpp"

#include <cmath>
#include <limits>

#include <boost/math/tools/roots.hpp>

#include "error.hpp"

namespace lpasa
{
double loglog_slope(std::span<double const> x, std::span<double const> y)
{
    if (x.size() != y.size() || x.size() < 2)
        fail(ErrorCode::precondition, "slope fit needs at least two points");
    double sx = 0;
    double sy = 0;
    auto const n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        if (!(x[i] > 0) || !(y[i] > 0))
            return std::numeric_limits<double>::quiet_NaN();
        sx += std::log(x[i]);
        sy += std::log(y[i]);
    }
    double const mx = sx / n;
    double const my = sy / n;
    double sxy = 0;
    double sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        double const dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

Extrapolation extrapolate_limit(std::span<double const> params,
                                std::span<double const> ratios)
{
    auto const m = params.size();
    if (m != ratios.size() || m < 3)
        fail(ErrorCode::precondition, "extrapolation needs at least 3 samples");
    for (std::size_t i = 1; i < m; ++i)
    {
        if (!(params[i] < params[i - 1]))
            fail(ErrorCode::precondition,
                 "schedule must be strictly decreasing");
    }

    Extrapolation out;
    auto const tail_x = params.subspan(m - 3);
    auto const tail_r = ratios.subspan(m - 3);
    out.fitted_exponent = loglog_slope(tail_x, tail_r);
    double const r1 = tail_r[0];
    double const r2 = tail_r[1];
    double const r3 = tail_r[2];
    out.value = r3;

    if (out.fitted_exponent < -0.05)
    {
        out.divergent = true;
        out.value = std::numeric_limits<double>::infinity();
        out.note = "ratio grows as the parameter decreases";
        return out;
    }

    double const d1 = r1 - r2;
    double const d2 = r2 - r3;
    if (std::abs(d2) <= 1e-13 * std::abs(r3))
    {
        out.note = "converged to rounding";
        return out;
    }
    if (d1 * d2 <= 0)
    {
        out.note = "non-monotone ratios; finest sample reported";
        return out;
    }

    double const x1 = tail_x[0];
    double const x2 = tail_x[1];
    double const x3 = tail_x[2];
    double const q = d1 / d2;
    auto mismatch = [&](double g) {
        return (std::pow(x1, g) - std::pow(x2, g))
                   / (std::pow(x2, g) - std::pow(x3, g))
               - q;
    };
    double const lo = 1e-6;
    double const hi = 8;
    double const flo = mismatch(lo);
    double const fhi = mismatch(hi);
    if (!(flo < 0 && fhi > 0))
    {
        out.note = "correction exponent outside (0, 8]; finest sample reported";
        return out;
    }
    std::uintmax_t iters = 200;
    auto const [a, b] = boost::math::tools::toms748_solve(
        mismatch, lo, hi, flo, fhi,
        boost::math::tools::eps_tolerance<double>(50), iters);
    double const g = 0.5 * (a + b);
    double const c = d2 / (std::pow(x2, g) - std::pow(x3, g));
    out.rate = g;
    out.value = r3 - c * std::pow(x3, g);
    return out;
}

}  // namespace lpasa
