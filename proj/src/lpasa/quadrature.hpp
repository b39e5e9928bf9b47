#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "direction.hpp"

namespace lpasa
{
enum class GridScheme
{
    circle_uniform,   //!< trapezoid rule on S^1
    sphere3_product,  //!< Gauss-Legendre in cos(phi) x uniform azimuth on S^2
    monte_carlo,      //!< normalized Gaussian samples on S^{n-1}
    circle_piecewise, //!< Gauss-Legendre panels between fixed breakpoints on S^1
};

char const* to_string(GridScheme scheme);

/*!
 * Quadrature nodes and weights on S^{n-1}.
 *
 * Weights sum to |S^{n-1}| (exactly up to rounding for deterministic
 * schemes, by construction for Monte Carlo). Every grid knows how to
 * rebuild itself at half resolution, which is how integrate() produces its
 * refinement-based error estimate.
 */
class SphereGrid
{
  public:
    int dim() const { return dim_; }
    GridScheme scheme() const { return scheme_; }
    int resolution() const { return resolution_; }
    int secondary_resolution() const { return secondary_; }
    std::uint64_t seed() const { return seed_; }
    std::size_t size() const { return nodes_.size(); }

    std::vector<Direction> const& nodes() const { return nodes_; }
    std::vector<double> const& weights() const { return weights_; }
    std::vector<double> const& breakpoints() const { return breaks_; }

    double total_weight() const;

    //! Same scheme at half resolution (used for error estimates).
    SphereGrid coarsened() const;

    //! e.g. "circle:4096", "sphere3:128x64", "mc:200000@7".
    std::string describe() const;

  private:
    friend SphereGrid grid_circle(int);
    friend SphereGrid grid_sphere3(int, int);
    friend SphereGrid grid_mc(int, int, std::uint64_t);
    friend SphereGrid grid_circle_piecewise(std::vector<double>, int);

    int dim_ = 0;
    GridScheme scheme_ = GridScheme::circle_uniform;
    int resolution_ = 0;
    int secondary_ = 0;
    std::uint64_t seed_ = 0;
    std::vector<Direction> nodes_;
    std::vector<double> weights_;
    std::vector<double> breaks_;
};

//! N equally spaced angles 2 pi i / N, weights 2 pi / N. Requires N >= 8.
SphereGrid grid_circle(int n_nodes);

//! Product grid on S^2: n_theta uniform azimuths x n_phi Gauss-Legendre
//! nodes in cos(phi). Requires n_theta >= 8, n_phi >= 4.
SphereGrid grid_sphere3(int n_theta, int n_phi);

//! Deterministic Monte Carlo grid: N >= 1000 rotation-invariant samples.
SphereGrid grid_mc(int dim, int n_nodes, std::uint64_t seed);

//! Gauss-Legendre panels on S^1 between sorted breakpoints (angles), with
//! \p per_panel nodes each. Integrands smooth inside each panel converge
//! spectrally even when they jump at the breakpoints.
SphereGrid grid_circle_piecewise(std::vector<double> breakpoints, int per_panel);

//! Defaults: circle 4096 (n=2), product 128x64 (n=3), Monte Carlo 200000
//! (n >= 4).
SphereGrid default_grid(int dim, std::uint64_t seed = 0);

//! Parse "circle:N", "sphere3:NTxNP", "mc:N", "piecewise:N" or "default".
SphereGrid parse_grid(std::string const& spec, int dim, std::uint64_t seed);

struct IntegralResult
{
    double value = 0;
    double error_estimate = 0;
    std::size_t nodes_used = 0;
    bool divergent = false;
};

using SphereIntegrand = std::function<double(Direction const&)>;

/*!
 * Sum w_i f(u_i) in node order with Neumaier compensation.
 *
 * The error estimate is |I(grid) - I(grid at half resolution)| for the
 * deterministic schemes and the sample standard error for Monte Carlo. Any
 * non-finite node value sets the divergence flag and a +inf value.
 */
IntegralResult integrate(SphereIntegrand const& f, SphereGrid const& grid);

//! Whether integrate_samples needs values on grid.coarsened() (false when
//! the coarse values are a subset of the fine ones or for Monte Carlo).
bool needs_coarse_values(SphereGrid const& grid);

//! Same reduction as integrate() from precomputed node values.
IntegralResult integrate_samples(SphereGrid const& grid,
                                 std::span<double const> values,
                                 std::span<double const> coarse_values);

//! Gauss-Legendre rule on [-1, 1].
struct GaussRule
{
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule gauss_legendre(int order);

//! Cached 48-point rule for panel integrals.
GaussRule const& panel_rule();

//! Integrate g over [a, b] with the cached panel rule.
double integrate_panel(std::function<double(double)> const& g, double a,
                       double b);

//! Compensated accumulator with fixed summation order.
class NeumaierSum
{
  public:
    void add(double x)
    {
        double const t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0;
    double comp_ = 0;
};

}  // namespace lpasa
