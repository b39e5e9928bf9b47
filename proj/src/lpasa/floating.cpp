#include "floating.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/tools/roots.hpp>

#include "asa.hpp"
#include "error.hpp"
#include "extrapolation.hpp"
#include "polygon.hpp"

namespace lpasa
{
namespace
{
constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2 * pi;
constexpr double max_panel = pi / 8;

namespace bmt = boost::math::tools;

void require_floating_body(ConvexBody const& body)
{
    if (body.dim() != 2)
        fail(ErrorCode::unsupported_kind,
             "floating and surface bodies are implemented for n = 2 only");
}

//! Root of a monotone increasing g on [lo, hi] with g(lo) < 0 < g(hi).
template<class G>
double solve_increasing(G&& g, double lo, double hi, double glo, double ghi,
                        int bits)
{
    if (glo >= 0)
        return lo;
    if (ghi <= 0)
        return hi;
    std::uintmax_t iters = 300;
    auto const [a, b] = bmt::toms748_solve(g, lo, hi, glo, ghi,
                                           bmt::eps_tolerance<double>(bits),
                                           iters);
    return 0.5 * (a + b);
}

//! \int_a^b g split at breakpoints and into panels no wider than pi/8.
template<class G>
double integrate_arc(G&& g, double a, double b,
                     std::vector<double> const& breaks)
{
    std::vector<double> cuts{a};
    for (double br : breaks)
    {
        // shift the breakpoint into (a, b) if some 2 pi translate lies there
        double t = br + two_pi * std::ceil((a - br) / two_pi);
        while (t < b)
        {
            if (t > a)
                cuts.push_back(t);
            t += two_pi;
        }
    }
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    NeumaierSum sum;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    {
        double const lo = cuts[i];
        double const hi = cuts[i + 1];
        int const pieces = std::max(1, static_cast<int>(std::ceil((hi - lo) / max_panel)));
        double const w = (hi - lo) / pieces;
        for (int k = 0; k < pieces; ++k)
            sum.add(integrate_panel(g, lo + k * w, lo + (k + 1) * w));
    }
    return sum.value();
}

/*!
 * Chord geometry of a smooth planar body in direction theta: the cap
 * {<x, u> >= h(u) - drop} meets the boundary at normal angles phi1 < theta <
 * phi2, found from drop(phi) = h(theta) - <x(phi), u(theta)>, which
 * increases on [theta, theta + pi] and decreases on [theta - pi, theta].
 */
class SmoothCap
{
  public:
    SmoothCap(ConvexBody const& body, double theta)
        : body_(body), theta_(theta), breaks_(planar_breakpoints(body))
    {
        auto const j = planar_jet(body, theta);
        h_ = j.h;
        f_ = j.curvature_fn();
        width_ = h_ + planar_jet(body, theta + pi).h;
    }

    double width() const { return width_; }
    double curvature_fn() const { return f_; }

    double drop_at(double phi) const
    {
        auto const j = planar_jet(body_, phi);
        double const d = phi - theta_;
        return h_ - (j.h * std::cos(d) - j.dh * std::sin(d));
    }

    //! Normal angles (phi1, phi2) of the chord endpoints.
    std::pair<double, double> chord(double drop) const
    {
        if (drop <= 0)
            return {theta_, theta_};
        auto g_hi = [&](double phi) { return this->drop_at(phi) - drop; };
        auto g_lo = [&](double phi) { return drop - this->drop_at(phi); };
        double const phi2 = solve_increasing(g_hi, theta_, theta_ + pi, -drop,
                                             width_ - drop, 52);
        double const phi1 = solve_increasing(g_lo, theta_ - pi, theta_,
                                             drop - width_, drop, 52);
        return {phi1, phi2};
    }

    //! Area between the boundary arc and the chord.
    double area(double drop) const
    {
        auto const [phi1, phi2] = this->chord(drop);
        if (phi2 <= phi1)
            return 0;
        auto const j1 = planar_jet(body_, phi1);
        auto g = [&](double psi) {
            auto const j = planar_jet(body_, psi);
            double const d = psi - phi1;
            double const gap = j.h - j1.h * std::cos(d) - j1.dh * std::sin(d);
            return j.curvature_fn() * gap;
        };
        return 0.5 * integrate_arc(g, phi1, phi2, breaks_);
    }

    //! Weighted boundary measure of the cap.
    double measure(double drop, BoundaryWeight const& w) const
    {
        auto const [phi1, phi2] = this->chord(drop);
        if (phi2 <= phi1)
            return 0;
        auto g = [&](double psi) {
            return w(Direction::from_angle(psi))
                   * planar_jet(body_, psi).curvature_fn();
        };
        return integrate_arc(g, phi1, phi2, breaks_);
    }

  private:
    ConvexBody const& body_;
    double theta_;
    std::vector<double> breaks_;
    double h_ = 0;
    double f_ = 0;
    double width_ = 0;
};

LabeledPolygon labeled(std::vector<Vec2> const& vertices)
{
    LabeledPolygon p;
    p.vertices = vertices;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        p.edge_labels.push_back(static_cast<int>(i));
    return p;
}

double polygon_width(std::vector<Vec2> const& v, Vec2 const& u)
{
    double hi = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    for (auto const& x : v)
    {
        hi = std::max(hi, x.dot(u));
        lo = std::min(lo, x.dot(u));
    }
    return hi - lo;
}

//! Length of the facet with outer normal u (0 if that face is a vertex).
double facet_length(std::vector<Vec2> const& v, Vec2 const& u, double h)
{
    Vec2 const t(-u.y(), u.x());
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (auto const& x : v)
    {
        if (x.dot(u) < h - 1e-12 * (1 + std::abs(h)))
            continue;
        lo = std::min(lo, x.dot(t));
        hi = std::max(hi, x.dot(t));
    }
    return hi > lo ? hi - lo : 0.0;
}

//! Boundary length of the polygon inside the cap (cut edges excluded).
double polygon_cap_boundary(LabeledPolygon const& cap)
{
    NeumaierSum sum;
    auto const n = cap.vertices.size();
    for (std::size_t i = 0; i < n; ++i)
    {
        if (cap.edge_labels[i] >= 0)
            sum.add((cap.vertices[(i + 1) % n] - cap.vertices[i]).norm());
    }
    return sum.value();
}

InnerBodyApprox intersect_cuts(ConvexBody const& body,
                               std::vector<CapCut> const& cuts,
                               double parameter)
{
    InnerBodyApprox inner;
    inner.parameter = parameter;
    inner.direction_count = static_cast<int>(cuts.size());
    double extent = 0;
    for (auto const& c : cuts)
    {
        double const h = support(body, c.direction);
        Vec2 const u(c.direction[0], c.direction[1]);
        inner.halfspaces.push_back({u, h - c.offset_drop});
        inner.supports.push_back(h);
        inner.drops.push_back(c.offset_drop);
        extent = std::max(extent, h);
    }
    auto poly = bounding_square(2 * extent);
    for (std::size_t i = 0; i < cuts.size(); ++i)
    {
        poly = clip(poly, inner.halfspaces[i].normal, inner.halfspaces[i].offset,
                    static_cast<int>(i));
        if (poly.empty())
            fail(ErrorCode::degenerate_body,
                 "inner body is empty; the parameter is too large");
    }
    inner.vertices = std::move(poly.vertices);
    inner.edge_labels = std::move(poly.edge_labels);
    return inner;
}

void check_direction_count(int direction_count)
{
    if (direction_count < 64)
        fail(ErrorCode::config, "at least 64 cut directions are required");
}

}  // namespace

//---------------------------------------------------------------------------//

BoundaryWeight weight_constant(double c)
{
    if (!(c > 0) || !std::isfinite(c))
        fail(ErrorCode::precondition, "boundary weight must be positive");
    BoundaryWeight w;
    w.constant = c;
    w.label = "const(" + std::to_string(c) + ")";
    return w;
}

BoundaryWeight weight_fp(ConvexBody const& body, double p)
{
    if (!body.is_smooth())
        fail(ErrorCode::unsupported_kind, "f_p weight needs a smooth body");
    check_exponent(p, body.dim());
    BoundaryWeight w;
    w.fn = [body, p](Direction const& u) { return f_p_weight(body, p, u); };
    w.label = "f_p(" + std::to_string(p) + ")";
    return w;
}

double floating_constant(int dim)
{
    double const n = dim;
    return 2 * std::pow(unit_ball_volume(dim - 1) / (n + 1), 2 / (n + 1));
}

double surface_constant(int dim)
{
    double const n = dim;
    return 2 * std::pow(unit_ball_volume(dim - 1), 2 / (n - 1));
}

CapCut cap_volume_offset(ConvexBody const& body, Direction const& u,
                         double delta)
{
    require_floating_body(body);
    double const area = volume(body);
    // the halving cut is allowed, with slack for the rounding in |K|
    if (!(delta > 0) || !(delta <= 0.5 * area * (1 + 1e-12)))
        fail(ErrorCode::precondition, "cap volume must lie in (0, |K|/2]");

    CapCut cut{u, 0, delta};
    if (body.is_smooth())
    {
        SmoothCap cap(body, u.angle());
        auto g = [&](double d) { return cap.area(d) - delta; };
        // start from the osculating-circle estimate A ~ (4 sqrt 2 / 3) sqrt f d^{3/2}
        double const guess
            = std::pow(3 * delta / (4 * std::sqrt(2 * cap.curvature_fn())),
                       2.0 / 3);
        double lo = std::min(0.5 * guess, 0.5 * cap.width());
        double hi = std::min(2 * guess, cap.width());
        double glo = g(lo);
        double ghi = g(hi);
        while (glo > 0 && lo > 1e-300)
        {
            hi = lo;
            ghi = glo;
            lo *= 0.25;
            glo = g(lo);
        }
        if (ghi < 0)
        {
            lo = hi;
            glo = ghi;
            hi = cap.width();
            ghi = area - delta;
        }
        cut.offset_drop = solve_increasing(g, lo, hi, glo, ghi, 42);
        return cut;
    }

    auto const poly = labeled(planar_vertices(body));
    Vec2 const v(u[0], u[1]);
    double const h = support(body, u);
    auto g = [&](double d) {
        auto const cap = clip_above(poly, v, h - d);
        return (cap.empty() ? 0.0 : polygon_area(cap.vertices)) - delta;
    };
    double const width = polygon_width(poly.vertices, v);
    cut.offset_drop = solve_increasing(g, 0.0, width, -delta, area - delta, 42);
    return cut;
}

InnerBodyApprox floating_body(ConvexBody const& body, double delta,
                              int direction_count)
{
    require_floating_body(body);
    check_direction_count(direction_count);
    std::vector<CapCut> cuts;
    cuts.reserve(direction_count);
    for (int i = 0; i < direction_count; ++i)
    {
        auto const u = Direction::from_angle(two_pi * i / direction_count);
        cuts.push_back(cap_volume_offset(body, u, delta));
    }
    return intersect_cuts(body, cuts, delta);
}

namespace
{
double total_measure(ConvexBody const& body, BoundaryWeight const& weight)
{
    if (!body.is_smooth())
    {
        if (!weight.constant)
            fail(ErrorCode::unsupported_kind,
                 "polygon surface bodies need a constant weight");
        return *weight.constant * polygon_perimeter(planar_vertices(body));
    }
    return integrate_arc(
        [&](double psi) {
            return weight(Direction::from_angle(psi))
                   * planar_jet(body, psi).curvature_fn();
        },
        0.0, two_pi, planar_breakpoints(body));
}

CapCut surface_cut(ConvexBody const& body, Direction const& u,
                   BoundaryWeight const& weight, double s, double total)
{
    if (!(s > 0))
        fail(ErrorCode::precondition, "surface parameter must be positive");
    if (!(s < 0.5 * total))
        fail(ErrorCode::precondition,
             "surface parameter must be below half the weighted measure");
    CapCut cut{u, 0, s};

    if (body.is_smooth())
    {
        SmoothCap cap(body, u.angle());
        auto g = [&](double d) { return cap.measure(d, weight) - s; };
        // osculating circle: measure ~ 2 w sqrt(2 f d)
        double const w0 = weight(u);
        double const guess = std::pow(s / (2 * w0), 2) / (2 * cap.curvature_fn());
        double lo = std::min(0.5 * guess, 0.5 * cap.width());
        double hi = std::min(2 * guess, cap.width());
        double glo = g(lo);
        double ghi = g(hi);
        while (glo > 0 && lo > 1e-300)
        {
            hi = lo;
            ghi = glo;
            lo *= 0.25;
            glo = g(lo);
        }
        if (ghi < 0)
        {
            lo = hi;
            glo = ghi;
            hi = cap.width();
            ghi = total - s;
        }
        cut.offset_drop = solve_increasing(g, lo, hi, glo, ghi, 42);
        return cut;
    }

    double const c = *weight.constant;
    auto const poly = labeled(planar_vertices(body));
    Vec2 const v(u[0], u[1]);
    double const h = support(body, u);
    auto measure = [&](double d) {
        auto const cap = clip_above(poly, v, h - d);
        return cap.empty() ? 0.0 : c * polygon_cap_boundary(cap);
    };
    // a facet normal to u is removed by any positive drop
    if (c * facet_length(poly.vertices, v, h) > s)
        return cut;
    // the measure jumps at facets; bisect for sup{d : measure(d) <= s}
    double lo = 0;
    double hi = polygon_width(poly.vertices, v);
    for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i)
    {
        double const mid = 0.5 * (lo + hi);
        (measure(mid) <= s ? lo : hi) = mid;
    }
    cut.offset_drop = lo;
    return cut;
}

}  // namespace

CapCut surface_cap_offset(ConvexBody const& body, Direction const& u,
                          BoundaryWeight const& weight, double s)
{
    require_floating_body(body);
    return surface_cut(body, u, weight, s, total_measure(body, weight));
}

InnerBodyApprox surface_body(ConvexBody const& body,
                             BoundaryWeight const& weight, double s,
                             int direction_count)
{
    require_floating_body(body);
    check_direction_count(direction_count);
    std::vector<CapCut> cuts;
    cuts.reserve(direction_count);
    double const total = total_measure(body, weight);
    for (int i = 0; i < direction_count; ++i)
    {
        auto const u = Direction::from_angle(two_pi * i / direction_count);
        cuts.push_back(surface_cut(body, u, weight, s, total));
    }
    return intersect_cuts(body, cuts, s);
}

double polar_volume_deficit(ConvexBody const& outer,
                            InnerBodyApprox const& inner,
                            PolarReference reference)
{
    if (!contains_origin(inner.vertices))
        fail(ErrorCode::precondition, "inner body does not contain the origin");
    auto const m = inner.halfspaces.size();

    // vertices of the polar polygons: u_i / b_i (inner) and u_i / h_i
    std::vector<bool> active(m, false);
    for (int l : inner.edge_labels)
    {
        if (l >= 0)
            active[l] = true;
    }
    bool const all_active = std::all_of(active.begin(), active.end(),
                                        [](bool a) { return a; });

    double deficit = 0;
    if (all_active)
    {
        // per-triangle difference without cancellation:
        // 1/(b_i b_j) - 1/(h_i h_j) = (h_i d_j + d_i h_j - d_i d_j) / (b_i b_j h_i h_j)
        NeumaierSum sum;
        for (std::size_t i = 0; i < m; ++i)
        {
            std::size_t const j = (i + 1) % m;
            double const sine = cross(inner.halfspaces[i].normal,
                                      inner.halfspaces[j].normal);
            double const hi = inner.supports[i];
            double const hj = inner.supports[j];
            double const di = inner.drops[i];
            double const dj = inner.drops[j];
            double const bi = inner.halfspaces[i].offset;
            double const bj = inner.halfspaces[j].offset;
            sum.add(0.5 * sine * (hi * dj + di * hj - di * dj)
                    / (bi * bj * hi * hj));
        }
        deficit = sum.value();
    }
    else
    {
        std::vector<Vec2> polar_inner;
        std::vector<Vec2> polar_ref;
        for (std::size_t i = 0; i < m; ++i)
        {
            auto const& hs = inner.halfspaces[i];
            if (active[i])
                polar_inner.push_back(hs.normal / hs.offset);
            polar_ref.push_back(hs.normal / inner.supports[i]);
        }
        deficit = polygon_area(polar_inner) - polygon_area(polar_ref);
    }
    if (reference == PolarReference::exact)
    {
        // swap the sampled reference for the exact polar volume
        std::vector<Vec2> polar_ref;
        for (std::size_t i = 0; i < m; ++i)
            polar_ref.push_back(inner.halfspaces[i].normal / inner.supports[i]);
        deficit += polygon_area(polar_ref) - volume(polar_body(outer));
    }
    return deficit;
}

std::vector<double> geometric_schedule(double start, double ratio, int count)
{
    if (!(start > 0) || !(ratio > 1) || count < 3)
        fail(ErrorCode::config,
             "schedule needs start > 0, ratio > 1 and at least 3 values");
    std::vector<double> out;
    double x = start;
    for (int k = 0; k < count; ++k)
    {
        out.push_back(x);
        x /= ratio;
    }
    return out;
}

namespace
{
void check_schedule(std::vector<double> const& schedule)
{
    if (schedule.size() < 4)
        fail(ErrorCode::config, "limit schedules need at least 4 values");
    for (std::size_t i = 1; i < schedule.size(); ++i)
    {
        if (!(schedule[i] < schedule[i - 1]) || !(schedule[i] > 0))
            fail(ErrorCode::config, "schedule must be positive and decreasing");
    }
}

//! Arc bodies integrate on their own panel grid.
SphereGrid native_grid(ConvexBody const& body, SphereGrid const& grid)
{
    return body.kind() == BodyKind::piecewise_arc ? grid_for_body(body) : grid;
}

void finish_estimate(LimitEstimate& est)
{
    std::vector<double> x;
    std::vector<double> r;
    for (auto const& s : est.samples)
    {
        x.push_back(s.parameter);
        r.push_back(s.ratio);
    }
    auto const ex = extrapolate_limit(x, r);
    est.extrapolated = ex.value;
    est.fitted_exponent = ex.fitted_exponent;
    est.rate = ex.rate;
    est.divergent = ex.divergent;
    est.note = ex.note;
    if (est.target && !est.divergent)
        est.relative_gap = std::abs(est.extrapolated - *est.target) / *est.target;
    if (est.cross_target && !est.divergent)
        est.cross_gap
            = std::abs(est.extrapolated - *est.cross_target) / *est.cross_target;
}

}  // namespace

LimitEstimate floating_limit(ConvexBody const& body,
                             std::vector<double> const& schedule,
                             int direction_count, SphereGrid const& grid)
{
    require_floating_body(body);
    check_schedule(schedule);
    int const n = body.dim();
    double const cn = floating_constant(n);
    double const power = 2.0 / (n + 1);

    LimitEstimate est;
    est.direction_count = direction_count;
    est.grid = grid.describe();
    for (double delta : schedule)
    {
        auto const inner = floating_body(body, delta, direction_count);
        double const deficit = polar_volume_deficit(body, inner);
        est.samples.push_back(
            {delta, deficit, cn * deficit / std::pow(delta, power)});
    }
    if (body.is_smooth())
    {
        auto const polar = polar_body(body);
        auto const t = asa_sphere_form(polar, -static_cast<double>(n) / (n + 2),
                                       grid);
        est.target = t.value;
        est.target_error = t.error_estimate;
        auto const c = asa_sphere_form(body, -static_cast<double>(n) * (n + 2),
                                       native_grid(body, grid));
        est.cross_target = c.value;
    }
    finish_estimate(est);
    return est;
}

LimitEstimate surface_limit(ConvexBody const& body,
                            BoundaryWeight const& weight,
                            std::vector<double> const& schedule,
                            int direction_count, SphereGrid const& grid)
{
    require_floating_body(body);
    check_schedule(schedule);
    int const n = body.dim();
    double const bn = surface_constant(n);
    double const power = 2.0 / (n - 1);

    LimitEstimate est;
    est.direction_count = direction_count;
    est.grid = grid.describe();
    for (double s : schedule)
    {
        auto const inner = surface_body(body, weight, s, direction_count);
        double const deficit = polar_volume_deficit(body, inner);
        est.samples.push_back({s, deficit, bn * deficit / std::pow(s, power)});
    }
    if (body.is_smooth())
    {
        double const nn = n;
        auto const r = integrate(
            [&](Direction const& u) {
                auto const bp = boundary_point(body, u);
                return 1
                       / (std::pow(bp.support_value, nn + 1)
                          * std::pow(bp.curvature_fn, 1 / (nn - 1))
                          * std::pow(weight(u), 2 / (nn - 1)));
            },
            native_grid(body, grid));
        est.target = r.value;
        est.target_error = r.error_estimate;
    }
    finish_estimate(est);
    return est;
}

CubeExample cube_counterexample(int dim, double delta)
{
    if (dim < 2)
        fail(ErrorCode::precondition, "dimension must be at least 2");
    double const n = dim;
    double const nfact = std::tgamma(n + 1);
    double const leg = std::pow(nfact * delta, 1 / n);
    if (!(delta > 0) || !(leg < n))
        fail(ErrorCode::precondition, "corner cut must satisfy (n! delta)^{1/n} < n");
    double const base = std::pow(2.0, n) / nfact;
    CubeExample out;
    out.delta = delta;
    out.polar_volume = base * n / (n - leg);
    out.deficit_bound = base * leg / (n - leg);
    out.ratio = out.deficit_bound / std::pow(delta, 2 / (n + 1));
    return out;
}

}  // namespace lpasa
