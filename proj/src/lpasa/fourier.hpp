#pragma once

#include <span>
#include <vector>

namespace lpasa
{
//! Value and first three angular derivatives of a planar support function.
struct PlanarJet
{
    double h = 0;
    double dh = 0;
    double d2h = 0;
    double d3h = 0;

    //! Radius of curvature h + h'' (the planar curvature function).
    double curvature_fn() const { return h + d2h; }
};

/*!
 * Truncated real Fourier series
 *   h(t) = a0 + sum_{k=1..H} a_k cos(k t) + b_k sin(k t).
 *
 * Evaluation uses the angle-addition recurrence so that a jet costs O(H)
 * multiplications and a single sin/cos pair.
 */
class FourierSeries
{
  public:
    FourierSeries() = default;
    FourierSeries(double a0, std::vector<double> cos_coeffs,
                  std::vector<double> sin_coeffs);

    //! Least-squares fit to M uniform samples at t_j = 2 pi j / M.
    static FourierSeries fit(std::span<double const> samples, int harmonics);

    int harmonics() const { return static_cast<int>(cos_.size()); }
    double constant() const { return a0_; }
    std::vector<double> const& cos_coeffs() const { return cos_; }
    std::vector<double> const& sin_coeffs() const { return sin_; }

    double operator()(double t) const;
    PlanarJet jet(double t) const;

    //! Max |h(t_j) - s_j| over uniform samples.
    double max_residual(std::span<double const> samples) const;

    //! Drop trailing harmonics whose coefficients are exactly zero.
    FourierSeries trimmed() const;

    //! Copy with a_1 -= dx, b_1 -= dy (support function of K - (dx, dy)).
    FourierSeries translated(double dx, double dy) const;

  private:
    double a0_ = 0;
    std::vector<double> cos_;
    std::vector<double> sin_;
};

}  // namespace lpasa
