#include "quadrature.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "error.hpp"

namespace lpasa
{
namespace
{
constexpr double two_pi = 2 * std::numbers::pi;

int parse_int(std::string const& text, std::string const& what)
{
    int value = 0;
    auto const* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        fail(ErrorCode::config, "bad " + what + " '" + text + "'");
    return value;
}

}  // namespace

char const* to_string(GridScheme scheme)
{
    switch (scheme)
    {
        case GridScheme::circle_uniform: return "circle";
        case GridScheme::sphere3_product: return "sphere3";
        case GridScheme::monte_carlo: return "mc";
        case GridScheme::circle_piecewise: return "piecewise";
    }
    return "?";
}

double SphereGrid::total_weight() const
{
    NeumaierSum s;
    for (double w : weights_)
        s.add(w);
    return s.value();
}

SphereGrid SphereGrid::coarsened() const
{
    switch (scheme_)
    {
        case GridScheme::circle_uniform:
            return grid_circle(std::max(8, resolution_ / 2));
        case GridScheme::sphere3_product:
            return grid_sphere3(std::max(8, resolution_ / 2),
                                std::max(4, secondary_ / 2));
        case GridScheme::monte_carlo:
            return grid_mc(dim_, std::max(1000, resolution_ / 2), seed_ + 1);
        case GridScheme::circle_piecewise:
            return grid_circle_piecewise(breaks_, std::max(2, resolution_ / 2));
    }
    fail(ErrorCode::internal, "unknown grid scheme");
}

std::string SphereGrid::describe() const
{
    std::string out = to_string(scheme_);
    out += ':' + std::to_string(resolution_);
    if (scheme_ == GridScheme::sphere3_product)
        out += 'x' + std::to_string(secondary_);
    if (scheme_ == GridScheme::monte_carlo)
        out += '@' + std::to_string(seed_);
    return out;
}

SphereGrid grid_circle(int n_nodes)
{
    if (n_nodes < 8)
        fail(ErrorCode::config, "circle grid needs at least 8 nodes");
    SphereGrid g;
    g.dim_ = 2;
    g.scheme_ = GridScheme::circle_uniform;
    g.resolution_ = n_nodes;
    g.nodes_.reserve(n_nodes);
    double const dt = two_pi / n_nodes;
    for (int i = 0; i < n_nodes; ++i)
        g.nodes_.push_back(Direction::from_angle(dt * i));
    g.weights_.assign(n_nodes, dt);
    return g;
}

SphereGrid grid_sphere3(int n_theta, int n_phi)
{
    if (n_theta < 8 || n_phi < 4)
        fail(ErrorCode::config, "sphere3 grid needs n_theta >= 8 and n_phi >= 4");
    SphereGrid g;
    g.dim_ = 3;
    g.scheme_ = GridScheme::sphere3_product;
    g.resolution_ = n_theta;
    g.secondary_ = n_phi;
    auto const rule = gauss_legendre(n_phi);
    double const dt = two_pi / n_theta;
    g.nodes_.reserve(static_cast<std::size_t>(n_theta) * n_phi);
    for (int j = 0; j < n_phi; ++j)
    {
        double const z = rule.nodes[j];
        double const r = std::sqrt(std::max(0.0, 1 - z * z));
        for (int i = 0; i < n_theta; ++i)
        {
            double const t = dt * i;
            Vec v(3);
            v << r * std::cos(t), r * std::sin(t), z;
            g.nodes_.emplace_back(std::move(v));
            g.weights_.push_back(rule.weights[j] * dt);
        }
    }
    return g;
}

SphereGrid grid_mc(int dim, int n_nodes, std::uint64_t seed)
{
    if (dim < 2 || n_nodes < 1000)
        fail(ErrorCode::config, "Monte Carlo grid needs n >= 2 and N >= 1000");
    SphereGrid g;
    g.dim_ = dim;
    g.scheme_ = GridScheme::monte_carlo;
    g.resolution_ = n_nodes;
    g.seed_ = seed;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    g.nodes_.reserve(n_nodes);
    for (int i = 0; i < n_nodes; ++i)
    {
        Vec v(dim);
        do
        {
            for (int k = 0; k < dim; ++k)
                v[k] = gauss(rng);
        } while (v.norm() == 0);
        g.nodes_.emplace_back(std::move(v));
    }
    g.weights_.assign(n_nodes, unit_sphere_area(dim) / n_nodes);
    return g;
}

SphereGrid grid_circle_piecewise(std::vector<double> breakpoints, int per_panel)
{
    if (per_panel < 2)
        fail(ErrorCode::config, "piecewise grid needs at least 2 nodes per panel");
    for (double& b : breakpoints)
        b = b - two_pi * std::floor(b / two_pi);
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end(),
                                  [](double a, double b) {
                                      return std::abs(a - b) < 1e-14;
                                  }),
                      breakpoints.end());
    if (breakpoints.empty())
        breakpoints.push_back(0.0);

    SphereGrid g;
    g.dim_ = 2;
    g.scheme_ = GridScheme::circle_piecewise;
    g.resolution_ = per_panel;
    g.breaks_ = breakpoints;
    auto const rule = gauss_legendre(per_panel);
    auto const m = breakpoints.size();
    for (std::size_t i = 0; i < m; ++i)
    {
        double const a = breakpoints[i];
        double const b = (i + 1 < m) ? breakpoints[i + 1]
                                     : breakpoints[0] + two_pi;
        double const mid = 0.5 * (a + b);
        double const half = 0.5 * (b - a);
        for (int k = 0; k < per_panel; ++k)
        {
            g.nodes_.push_back(Direction::from_angle(mid + half * rule.nodes[k]));
            g.weights_.push_back(half * rule.weights[k]);
        }
    }
    return g;
}

SphereGrid default_grid(int dim, std::uint64_t seed)
{
    if (dim == 2)
        return grid_circle(4096);
    if (dim == 3)
        return grid_sphere3(128, 64);
    return grid_mc(dim, 200000, seed);
}

SphereGrid parse_grid(std::string const& spec, int dim, std::uint64_t seed)
{
    if (spec.empty() || spec == "default")
        return default_grid(dim, seed);
    auto const colon = spec.find(':');
    if (colon == std::string::npos)
        fail(ErrorCode::config, "grid spec must be SCHEME:RES, got '" + spec + "'");
    auto const scheme = spec.substr(0, colon);
    auto const res = spec.substr(colon + 1);
    if (scheme == "circle")
    {
        if (dim != 2)
            fail(ErrorCode::config, "circle grid requires a planar body");
        return grid_circle(parse_int(res, "circle resolution"));
    }
    if (scheme == "sphere3")
    {
        if (dim != 3)
            fail(ErrorCode::config, "sphere3 grid requires n = 3");
        auto const x = res.find('x');
        if (x == std::string::npos)
            fail(ErrorCode::config, "sphere3 resolution must be NTxNP");
        return grid_sphere3(parse_int(res.substr(0, x), "n_theta"),
                            parse_int(res.substr(x + 1), "n_phi"));
    }
    if (scheme == "mc")
    {
        // "mc:N@SEED" overrides the seed argument (the form describe() prints)
        auto const at = res.find('@');
        if (at == std::string::npos)
            return grid_mc(dim, parse_int(res, "Monte Carlo size"), seed);
        auto const s = parse_int(res.substr(at + 1), "Monte Carlo seed");
        if (s < 0)
            fail(ErrorCode::config, "Monte Carlo seed must be non-negative");
        return grid_mc(dim, parse_int(res.substr(0, at), "Monte Carlo size"),
                       static_cast<std::uint64_t>(s));
    }
    if (scheme == "piecewise")
    {
        if (dim != 2)
            fail(ErrorCode::config, "piecewise grid requires a planar body");
        return grid_circle_piecewise({0.0}, parse_int(res, "panel order"));
    }
    fail(ErrorCode::config, "unknown grid scheme '" + scheme + "'");
}

namespace
{
double infinity()
{
    return std::numeric_limits<double>::infinity();
}

}  // namespace

bool needs_coarse_values(SphereGrid const& grid)
{
    switch (grid.scheme())
    {
        case GridScheme::monte_carlo: return false;
        case GridScheme::circle_uniform:
            return grid.resolution() % 2 != 0;
        default: return true;
    }
}

IntegralResult integrate(SphereIntegrand const& f, SphereGrid const& grid)
{
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        values[i] = f(grid.nodes()[i]);
    std::vector<double> coarse;
    if (needs_coarse_values(grid))
    {
        auto const half = grid.coarsened();
        coarse.resize(half.size());
        for (std::size_t i = 0; i < half.size(); ++i)
            coarse[i] = f(half.nodes()[i]);
    }
    return integrate_samples(grid, values, coarse);
}

IntegralResult integrate_samples(SphereGrid const& grid,
                                 std::span<double const> values,
                                 std::span<double const> coarse_values)
{
    if (values.size() != grid.size())
        fail(ErrorCode::internal, "sample count does not match the grid");

    IntegralResult result;
    result.nodes_used = grid.size() + coarse_values.size();
    NeumaierSum fine;
    for (std::size_t i = 0; i < values.size(); ++i)
    {
        if (!std::isfinite(values[i]))
        {
            result.divergent = true;
            result.value = infinity();
            result.error_estimate = infinity();
            return result;
        }
        fine.add(grid.weights()[i] * values[i]);
    }
    result.value = fine.value();

    if (grid.scheme() == GridScheme::monte_carlo)
    {
        // standard error of the mean of |S| f(u)
        double const area = grid.total_weight();
        double const n = static_cast<double>(values.size());
        double const mean = result.value / area;
        NeumaierSum s2;
        for (double v : values)
            s2.add((v - mean) * (v - mean));
        result.error_estimate = area * std::sqrt(s2.value() / (n - 1) / n);
        return result;
    }

    NeumaierSum coarse;
    if (!needs_coarse_values(grid))
    {
        // even nodes of a uniform circle grid form the half-resolution grid
        for (std::size_t i = 0; i < values.size(); i += 2)
            coarse.add(2 * grid.weights()[i] * values[i]);
    }
    else
    {
        auto const half = grid.coarsened();
        if (coarse_values.size() != half.size())
            fail(ErrorCode::internal, "coarse sample count does not match");
        for (std::size_t i = 0; i < half.size(); ++i)
        {
            if (!std::isfinite(coarse_values[i]))
            {
                result.error_estimate = infinity();
                return result;
            }
            coarse.add(half.weights()[i] * coarse_values[i]);
        }
    }
    result.error_estimate = std::abs(result.value - coarse.value());
    return result;
}

GaussRule gauss_legendre(int order)
{
    if (order < 1)
        fail(ErrorCode::config, "Gauss-Legendre order must be positive");
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    int const m = (order + 1) / 2;
    for (int i = 0; i < m; ++i)
    {
        // Newton iteration on P_order from the Chebyshev-like initial guess
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double dp = 0;
        for (int iter = 0; iter < 100; ++iter)
        {
            double p0 = 1;
            double p1 = x;
            for (int k = 2; k <= order; ++k)
            {
                double const p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (order == 1)
                p0 = 1;
            dp = order * (x * p1 - p0) / (x * x - 1);
            double const dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        // recompute the derivative at the converged root
        double p0 = 1;
        double p1 = x;
        for (int k = 2; k <= order; ++k)
        {
            double const p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = order * (x * p1 - p0) / (x * x - 1);
        double const w = 2 / ((1 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    return rule;
}

GaussRule const& panel_rule()
{
    static GaussRule const rule = gauss_legendre(48);
    return rule;
}

double integrate_panel(std::function<double(double)> const& g, double a,
                       double b)
{
    auto const& rule = panel_rule();
    double const mid = 0.5 * (a + b);
    double const half = 0.5 * (b - a);
    NeumaierSum sum;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k)
        sum.add(rule.weights[k] * g(mid + half * rule.nodes[k]));
    return half * sum.value();
}

}  // namespace lpasa
