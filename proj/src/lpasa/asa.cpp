#include "asa.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "error.hpp"

namespace lpasa
{
namespace
{
constexpr double inf = std::numeric_limits<double>::infinity();

bool is_minus_n(double p, int dim)
{
    return p == -static_cast<double>(dim);
}

AsaValue polytope_convention(ConvexBody const& body, double p)
{
    int const n = body.dim();
    AsaValue out;
    out.p = p;
    out.method = AsaMethod::closed_form;
    if (std::isinf(p))
    {
        out.value = n * volume(polar_body(body));
    }
    else if (p == 0)
    {
        out.value = n * volume(body);
    }
    else if (p > 0)
    {
        out.value = 0;
        out.caveat = "curvature vanishes almost everywhere";
    }
    else if (p > -n)
    {
        out.value = inf;
        out.divergent = true;
        out.caveat = "integrand is infinite at vertices";
    }
    else
    {
        out.value = 0;
        out.caveat = "convention: integrand is zero almost everywhere for p < -n";
    }
    return out;
}

double power_term(double base, double exponent)
{
    return exponent == 0 ? 1.0 : std::pow(base, exponent);
}

//! Golden-section maximization of g on [a, b] to \p tol in the argument.
template<class F>
std::pair<double, double> golden_max(F&& g, double a, double b, double tol)
{
    double const r = 0.5 * (std::sqrt(5.0) - 1);
    double x1 = b - r * (b - a);
    double x2 = a + r * (b - a);
    double g1 = g(x1);
    double g2 = g(x2);
    while (b - a > tol)
    {
        if (g1 < g2)
        {
            a = x1;
            x1 = x2;
            g1 = g2;
            x2 = a + r * (b - a);
            g2 = g(x2);
        }
        else
        {
            b = x2;
            x2 = x1;
            g2 = g1;
            x1 = b - r * (b - a);
            g1 = g(x1);
        }
    }
    return g1 > g2 ? std::pair{x1, g1} : std::pair{x2, g2};
}

}  // namespace

char const* to_string(AsaMethod method)
{
    switch (method)
    {
        case AsaMethod::sphere_form: return "sphere-form";
        case AsaMethod::boundary_form: return "boundary-form";
        case AsaMethod::sup_form: return "sup-form";
        case AsaMethod::closed_form: return "closed-form";
    }
    return "?";
}

void check_exponent(double p, int dim)
{
    if (std::isnan(p))
        fail(ErrorCode::exponent, "exponent is NaN");
    if (std::abs(dim + p) < 1e-6)
        fail(ErrorCode::exponent,
             "exponent p = -n (or within 1e-6 of it) has no integral form");
}

std::pair<double, double> sphere_exponents(double p, int dim)
{
    double const n = dim;
    if (std::isinf(p))
        return {0.0, -n};
    return {n / (n + p), -n * (p - 1) / (n + p)};
}

std::pair<double, double> boundary_exponents(double p, int dim)
{
    double const n = dim;
    if (std::isinf(p))
        return {1.0, -n};
    return {p / (n + p), -n * (p - 1) / (n + p)};
}

SphereGrid grid_for_body(ConvexBody const& body, std::uint64_t seed)
{
    if (body.kind() == BodyKind::piecewise_arc)
        return grid_circle_piecewise(planar_breakpoints(body), 64);
    return default_grid(body.dim(), seed);
}

//---------------------------------------------------------------------------//

BodySamples::BodySamples(ConvexBody body, SphereGrid grid)
    : body_(std::move(body)), grid_(std::move(grid))
{
    if (grid_.dim() != body_.dim())
        fail(ErrorCode::config, "grid dimension does not match the body");
    bool const smooth = body_.is_smooth();
    auto fill = [&](SphereGrid const& g, std::vector<double>& h,
                    std::vector<double>& f) {
        h.resize(g.size());
        if (smooth)
            f.resize(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
        {
            auto const& u = g.nodes()[i];
            if (smooth)
            {
                auto const bp = boundary_point(body_, u);
                h[i] = bp.support_value;
                f[i] = bp.curvature_fn;
            }
            else
            {
                h[i] = support(body_, u);
            }
        }
    };
    fill(grid_, h_, f_);
    if (needs_coarse_values(grid_))
        fill(grid_.coarsened(), coarse_h_, coarse_f_);
}

AsaValue BodySamples::sphere_form(double p) const
{
    int const n = body_.dim();
    check_exponent(p, n);
    if (std::isinf(p))
        return this->infinity();
    if (!body_.is_smooth())
        return polytope_convention(body_, p);

    auto const [a, b] = sphere_exponents(p, n);
    auto eval = [a = a, b = b](std::vector<double> const& f,
                               std::vector<double> const& h) {
        std::vector<double> v(h.size());
        for (std::size_t i = 0; i < h.size(); ++i)
            v[i] = power_term(f[i], a) * power_term(h[i], b);
        return v;
    };
    auto const r = integrate_samples(grid_, eval(f_, h_),
                                     eval(coarse_f_, coarse_h_));
    AsaValue out;
    out.p = p;
    out.value = r.value;
    out.divergent = r.divergent;
    out.error_estimate = r.error_estimate;
    out.method = AsaMethod::sphere_form;
    out.grid = grid_.describe();
    return out;
}

AsaValue BodySamples::infinity() const
{
    int const n = body_.dim();
    if (!body_.is_smooth())
        return polytope_convention(body_, inf);
    auto eval = [n](std::vector<double> const& h) {
        std::vector<double> v(h.size());
        for (std::size_t i = 0; i < h.size(); ++i)
            v[i] = std::pow(h[i], -n);
        return v;
    };
    auto const r = integrate_samples(grid_, eval(h_), eval(coarse_h_));
    AsaValue out;
    out.p = inf;
    out.value = r.value;
    out.divergent = r.divergent;
    out.error_estimate = r.error_estimate;
    out.method = AsaMethod::sphere_form;
    out.grid = grid_.describe();
    return out;
}

//---------------------------------------------------------------------------//

AsaValue
asa_sphere_form(ConvexBody const& body, double p, SphereGrid const& grid)
{
    check_exponent(p, body.dim());
    if (!body.is_smooth())
        return polytope_convention(body, p);
    return BodySamples(body, grid).sphere_form(p);
}

AsaValue
asa_boundary_form(ConvexBody const& body, double p, SphereGrid const& grid)
{
    int const n = body.dim();
    check_exponent(p, n);
    if (!body.is_smooth())
    {
        fail(ErrorCode::unsupported_kind,
             "boundary form needs the inverse Gauss map");
    }
    auto const [a, b] = boundary_exponents(p, n);
    auto const r = integrate(
        [&body, a = a, b = b](Direction const& u) {
            auto const bp = boundary_point(body, u);
            double const kappa = boundary_curvature(body, u);
            double const xn = bp.position.dot(u.coords());
            return power_term(kappa, a) * power_term(xn, b) * bp.curvature_fn;
        },
        grid);
    AsaValue out;
    out.p = std::isinf(p) ? inf : p;
    out.value = r.value;
    out.divergent = r.divergent;
    out.error_estimate = r.error_estimate;
    out.method = AsaMethod::boundary_form;
    out.grid = grid.describe();
    return out;
}

AsaValue asa_infinity(ConvexBody const& body, SphereGrid const& grid)
{
    if (!body.is_smooth())
        return polytope_convention(body, inf);
    int const n = body.dim();
    auto const r = integrate(
        [&body, n](Direction const& u) { return std::pow(support(body, u), -n); },
        grid);
    AsaValue out;
    out.p = inf;
    out.value = r.value;
    out.divergent = r.divergent;
    out.error_estimate = r.error_estimate;
    out.method = AsaMethod::sphere_form;
    out.grid = grid.describe();
    return out;
}

AsaValue asa_minus_n(ConvexBody const& body, SphereGrid const& grid)
{
    int const n = body.dim();
    AsaValue out;
    out.p = -n;
    out.method = AsaMethod::sup_form;
    if (!body.is_smooth())
    {
        out.value = inf;
        out.divergent = true;
        out.caveat = "curvature function is unbounded at vertices";
        return out;
    }
    auto value_at = [&body, n](Direction const& u) {
        auto const bp = boundary_point(body, u);
        return std::sqrt(bp.curvature_fn)
               * std::pow(bp.support_value, 0.5 * (n + 1));
    };
    std::size_t best = 0;
    double best_value = -1;
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        double const v = value_at(grid.nodes()[i]);
        if (v > best_value)
        {
            best_value = v;
            best = i;
        }
    }
    out.value = best_value;
    out.grid = grid.describe();
    if (n == 2)
    {
        // refine between the neighbors of the best node
        auto const m = grid.size();
        double const t = grid.nodes()[best].angle();
        auto gap = [&](std::size_t j) {
            double d = std::remainder(grid.nodes()[j].angle() - t,
                                      2 * std::numbers::pi);
            return std::abs(d);
        };
        double const left = gap((best + m - 1) % m);
        double const right = gap((best + 1) % m);
        auto const [arg, refined] = golden_max(
            [&](double s) { return value_at(Direction::from_angle(s)); },
            t - left, t + right, 1e-10);
        (void)arg;
        if (refined > out.value)
        {
            out.error_estimate = refined - out.value;
            out.value = refined;
        }
    }
    return out;
}

AsaValue asa(ConvexBody const& body, double p, SphereGrid const& grid)
{
    if (is_minus_n(p, body.dim()))
        return asa_minus_n(body, grid);
    if (std::isinf(p))
        return asa_infinity(body, grid);
    return asa_sphere_form(body, p, grid);
}

double f_p_weight(ConvexBody const& body, double p, Direction const& u)
{
    int const n = body.dim();
    check_exponent(p, n);
    auto const bp = boundary_point(body, u);
    double const kappa = 1 / bp.curvature_fn;
    double const xn = bp.position.dot(u.coords());
    double const nn = n;
    double a;
    double b;
    if (std::isinf(p))
    {
        a = 0.5;
        b = -0.5 * (nn - 1);
    }
    else
    {
        a = (nn * nn + p) / (2 * (nn + p));
        b = -(nn - 1) * (nn * nn + 2 * nn + p) / (2 * (nn + p));
    }
    return std::pow(kappa, a) * std::pow(xn, b);
}

}  // namespace lpasa
