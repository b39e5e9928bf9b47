#pragma once

#include <span>
#include <string>

namespace lpasa
{
//! Least-squares slope of log y against log x. Requires positive data.
double loglog_slope(std::span<double const> x, std::span<double const> y);

struct Extrapolation
{
    double value = 0;           //!< +inf when divergent
    double fitted_exponent = 0; //!< log-log slope over the three finest samples
    double rate = 0;            //!< Richardson exponent gamma (0 if unused)
    bool divergent = false;
    std::string note;
};

/*!
 * Limit of r(x) as x -> 0 from samples with strictly decreasing x.
 *
 * The three finest samples give the log-log slope; a slope below -0.05 is
 * reported as divergence. Otherwise r = L + C x^gamma is fitted exactly
 * through the three finest samples (gamma from the ratio of successive
 * differences) and L is returned. Non-monotone differences, or gamma
 * outside (0, 8], fall back to the finest ratio with a note.
 */
Extrapolation extrapolate_limit(std::span<double const> params,
                                std::span<double const> ratios);

}  // namespace lpasa
