#include "bodies.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/LU>
#include <boost/math/tools/roots.hpp>

#include "error.hpp"
#include "polygon.hpp"

namespace lpasa
{
namespace
{
constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2 * pi;
constexpr int validation_grid = 4096;

template<class... Ts>
struct Overloaded : Ts...
{
    using Ts::operator()...;
};
template<class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string format_number(double x)
{
    std::ostringstream os;
    os << x;
    return os.str();
}

Ellipsoid ellipsoid_from_transform(Mat const& t)
{
    Ellipsoid e;
    e.transform = t;
    e.shape = t * t.transpose();
    e.shape_inv = e.shape.inverse();
    e.det_shape = e.shape.determinant();
    return e;
}

void require_planar(ConvexBody const& body, char const* what)
{
    if (body.dim() != 2)
        fail(ErrorCode::unsupported_kind,
             std::string(what) + " requires a planar body");
}

void require_smooth(ConvexBody const& body, char const* what)
{
    if (!body.is_smooth())
    {
        fail(ErrorCode::unsupported_kind,
             std::string(what) + " is undefined for "
                 + to_string(body.kind()) + " bodies");
    }
}

//! Index of the arc whose normal span contains theta.
std::size_t find_arc(PiecewiseArc const& pa, double theta)
{
    double const start = pa.arcs.front().normal_begin;
    double t = std::fmod(theta - start, two_pi);
    if (t < 0)
        t += two_pi;
    t += start;
    auto it = std::upper_bound(
        pa.arcs.begin(), pa.arcs.end(), t,
        [](double value, Arc const& arc) { return value < arc.normal_end; });
    if (it == pa.arcs.end())
        --it;
    return static_cast<std::size_t>(it - pa.arcs.begin());
}

PlanarJet ellipse_jet(Mat const& a, double theta)
{
    Vec2 const u = unit(theta);
    Vec2 const w = unit_perp(theta);
    Eigen::Matrix2d const m = a.topLeftCorner<2, 2>();
    double const q = u.dot(m * u);
    double const q1 = 2 * w.dot(m * u);
    double const q2 = 2 * (w.dot(m * w) - q);
    double const q3 = -4 * q1;
    PlanarJet j;
    j.h = std::sqrt(q);
    j.dh = q1 / (2 * j.h);
    j.d2h = (0.5 * q2 - j.dh * j.dh) / j.h;
    j.d3h = (q3 - 6 * j.dh * j.d2h) / (2 * j.h);
    return j;
}

PlanarJet arc_jet(Arc const& arc, double theta)
{
    Vec2 const u = unit(theta);
    Vec2 const w = unit_perp(theta);
    PlanarJet j;
    double const cu = arc.center.dot(u);
    double const cw = arc.center.dot(w);
    j.h = cu + arc.radius;
    j.dh = cw;
    j.d2h = -cu;
    j.d3h = -cw;
    return j;
}

//! Radial function of a smooth planar body via the boundary point whose
//! position angle equals theta. The tangential offset
//! d(phi) = <x(phi), u_perp(theta)> increases strictly on
//! (theta - pi/2, theta + pi/2) with d' = f cos(phi - theta).
double planar_radial(ConvexBody const& body, double theta)
{
    auto offset = [&](double phi) {
        auto const j = planar_jet(body, phi);
        double const s = std::sin(phi - theta);
        double const c = std::cos(phi - theta);
        return j.h * s + j.dh * c;
    };
    double lo = theta - 0.5 * pi;
    double hi = theta + 0.5 * pi;
    double flo = offset(lo);
    double fhi = offset(hi);
    if (!(flo < 0 && fhi > 0))
        fail(ErrorCode::precondition, "origin is not interior to the body");
    std::uintmax_t iters = 200;
    auto const [a, b] = boost::math::tools::toms748_solve(
        offset, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(52),
        iters);
    double const phi = 0.5 * (a + b);
    auto const j = planar_jet(body, phi);
    return j.h * std::cos(phi - theta) - j.dh * std::sin(phi - theta);
}

std::vector<Vec2> cube_vertices()
{
    return {{1, -1}, {1, 1}, {-1, 1}, {-1, -1}};
}

std::vector<Vec2> cross_vertices()
{
    return {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
}

void check_planar_positive(ConvexBody const& body, bool check_curvature)
{
    double const dt = two_pi / validation_grid;
    for (int i = 0; i < validation_grid; ++i)
    {
        auto const j = planar_jet(body, dt * i);
        if (!(j.h > 0))
        {
            fail(ErrorCode::precondition,
                 "origin is not interior: h <= 0 at theta = "
                     + format_number(dt * i));
        }
        if (check_curvature && !(j.curvature_fn() > 0))
        {
            fail(ErrorCode::geometry,
                 "body is not C2+: h + h'' <= 0 at theta = "
                     + format_number(dt * i));
        }
    }
}

}  // namespace

//---------------------------------------------------------------------------//

char const* to_string(BodyKind kind)
{
    switch (kind)
    {
        case BodyKind::ellipsoid: return "ellipsoid";
        case BodyKind::planar_support: return "planar_support";
        case BodyKind::piecewise_arc: return "piecewise_arc";
        case BodyKind::halfspace_polytope: return "halfspace_polytope";
        case BodyKind::cube: return "cube";
        case BodyKind::cross_polytope: return "cross_polytope";
    }
    return "?";
}

ConvexBody::ConvexBody(int dim, Data data, std::string label)
    : dim_(dim), data_(std::move(data)), label_(std::move(label))
{
    if (dim_ < 2)
        fail(ErrorCode::precondition, "dimension must be at least 2");
}

bool ConvexBody::is_smooth() const
{
    switch (this->kind())
    {
        case BodyKind::ellipsoid:
        case BodyKind::planar_support:
        case BodyKind::piecewise_arc: return true;
        default: return false;
    }
}

ConvexBody ConvexBody::with_label(std::string label) const
{
    ConvexBody out = *this;
    out.label_ = std::move(label);
    return out;
}

ConvexBody
ConvexBody::with_fit(std::string method, double residual, int harmonics) const
{
    ConvexBody out = *this;
    out.method_ = std::move(method);
    out.fit_residual_ = residual;
    out.fit_harmonics_ = harmonics;
    return out;
}

LinearMap make_linear_map(Mat matrix)
{
    if (matrix.rows() != matrix.cols() || matrix.rows() < 2)
        fail(ErrorCode::precondition, "linear map must be square, n >= 2");
    LinearMap m;
    m.determinant = matrix.determinant();
    if (!(std::abs(m.determinant) >= 1e-14))
        fail(ErrorCode::precondition, "linear map is singular");
    m.matrix = std::move(matrix);
    return m;
}

//---------------------------------------------------------------------------//
// Construction
//---------------------------------------------------------------------------//

ConvexBody make_ellipsoid(std::vector<double> const& semi_axes,
                          Mat const& orientation)
{
    auto const n = static_cast<int>(semi_axes.size());
    if (n < 2)
        fail(ErrorCode::precondition, "ellipsoid needs at least two semi-axes");
    Vec a(n);
    for (int i = 0; i < n; ++i)
    {
        if (!(semi_axes[i] > 0) || !std::isfinite(semi_axes[i]))
            fail(ErrorCode::precondition, "semi-axes must be positive");
        a[i] = semi_axes[i];
    }
    Mat q = orientation;
    if (q.size() == 0)
        q = Mat::Identity(n, n);
    if (q.rows() != n || q.cols() != n)
        fail(ErrorCode::precondition, "orientation must be n x n");
    if (!(q.transpose() * q).isApprox(Mat::Identity(n, n), 1e-9))
        fail(ErrorCode::precondition, "orientation must be orthogonal");

    std::string label = "ellipsoid(";
    for (int i = 0; i < n; ++i)
        label += (i ? "," : "") + format_number(a[i]);
    label += ")";
    return ConvexBody(n, ellipsoid_from_transform(q * a.asDiagonal()),
                      std::move(label));
}

ConvexBody make_ball(int dim, double radius)
{
    if (dim < 2)
        fail(ErrorCode::precondition, "dimension must be at least 2");
    auto body = make_ellipsoid(std::vector<double>(dim, radius));
    std::string label = "ball(" + std::to_string(dim);
    if (radius != 1)
        label += ",r=" + format_number(radius);
    return body.with_label(label + ")");
}

ConvexBody make_planar_support(FourierSeries h, std::string label, bool validate)
{
    if (label.empty())
        label = "planar_support(H=" + std::to_string(h.harmonics()) + ")";
    ConvexBody body(2, PlanarSupport{std::move(h)}, std::move(label));
    check_planar_positive(body, validate);
    return body;
}

ConvexBody make_piecewise_arc(std::vector<Arc> arcs, std::string label)
{
    if (arcs.size() < 2)
        fail(ErrorCode::geometry, "piecewise arc body needs at least two arcs");
    for (std::size_t i = 0; i < arcs.size(); ++i)
    {
        auto const& a = arcs[i];
        if (!(a.radius > 0) || !(a.normal_end > a.normal_begin))
            fail(ErrorCode::geometry, "arc " + std::to_string(i)
                                          + " has nonpositive radius or span");
        auto const& b = arcs[(i + 1) % arcs.size()];
        double const next_begin
            = (i + 1 < arcs.size()) ? b.normal_begin : b.normal_begin + two_pi;
        if (std::abs(a.normal_end - next_begin) > 1e-9)
            fail(ErrorCode::geometry, "arc normals are not contiguous at arc "
                                          + std::to_string(i));
        Vec2 const end = a.center + a.radius * unit(a.normal_end);
        Vec2 const start = b.center + b.radius * unit(b.normal_begin);
        double const scale = 1 + a.center.norm() + a.radius;
        if ((end - start).norm() > 1e-9 * scale)
            fail(ErrorCode::geometry, "arcs do not join continuously at arc "
                                          + std::to_string(i));
    }
    if (label.empty())
        label = "piecewise_arc(" + std::to_string(arcs.size()) + ")";
    ConvexBody body(2, PiecewiseArc{std::move(arcs)}, std::move(label));
    check_planar_positive(body, false);
    return body;
}

ConvexBody make_rounded_intersection(double big_radius, double eps)
{
    double const r = big_radius;
    if (!(r > 1) || !(eps > 0) || !(eps < 1))
        fail(ErrorCode::geometry, "rounded body needs R > 1 and 0 < eps < 1");
    double const disc = 2 * (r - eps) * (r - eps) - (r - 1) * (r - 1);
    if (!(disc > 0))
        fail(ErrorCode::geometry, "no corner circle is tangent to both arcs");
    // corner center q = t (e_k + e_{k+1}) with |q - c_k| = R - eps
    double const t = 0.5 * (std::sqrt(disc) - (r - 1));

    // in the frame (e_k, e_{k+1}) the corner center sits at
    // (t + R - 1, t) from c_k and (t, t + R - 1) from c_{k+1}
    double const a = std::atan2(t, t + r - 1);
    std::array<Vec2, 4> centers;
    std::array<Vec2, 4> corners;
    std::array<double, 4> alpha;
    std::array<double, 4> beta;
    for (int k = 0; k < 4; ++k)
    {
        centers[k] = -(r - 1) * unit(0.5 * pi * k);
        corners[k] = t * (unit(0.5 * pi * k) + unit(0.5 * pi * (k + 1)));
        alpha[k] = 0.5 * pi * k + a;
        beta[k] = 0.5 * pi * (k + 1) - a;
    }

    std::vector<Arc> arcs;
    for (int k = 0; k < 4; ++k)
    {
        double const begin = (k == 0) ? beta[3] - two_pi : beta[k - 1];
        arcs.push_back({centers[k], r, begin, alpha[k]});
        arcs.push_back({corners[k], eps, alpha[k], beta[k]});
    }
    return make_piecewise_arc(std::move(arcs),
                              "rounded(R=" + format_number(r) + ",eps="
                                  + format_number(eps) + ")");
}

ConvexBody
make_halfspace_polytope(std::vector<Halfspace> halfspaces, std::string label)
{
    if (halfspaces.size() < 3)
        fail(ErrorCode::degenerate_body, "polygon needs at least 3 halfplanes");
    double max_offset = 0;
    for (auto& hs : halfspaces)
    {
        double const norm = hs.normal.norm();
        if (!(norm > 0))
            fail(ErrorCode::precondition, "halfplane normal must be nonzero");
        hs.normal /= norm;
        hs.offset /= norm;
        if (!(hs.offset > 0))
            fail(ErrorCode::precondition, "origin must be interior (offset > 0)");
        max_offset = std::max(max_offset, hs.offset);
    }
    double const box = 1e6 * max_offset;
    auto poly = bounding_square(box);
    for (std::size_t i = 0; i < halfspaces.size(); ++i)
    {
        poly = clip(poly, halfspaces[i].normal, halfspaces[i].offset,
                    static_cast<int>(i));
        if (poly.empty())
            fail(ErrorCode::degenerate_body, "halfplane intersection is empty");
    }
    for (int l : poly.edge_labels)
    {
        if (l < 0)
            fail(ErrorCode::degenerate_body, "halfplane intersection is unbounded");
    }
    // The far-away box costs ~1e6 eps in the clipped coordinates; snap each
    // vertex to the intersection of its two constraint lines.
    auto const m = poly.vertices.size();
    for (std::size_t i = 0; i < m; ++i)
    {
        auto const& a = halfspaces[poly.edge_labels[(i + m - 1) % m]];
        auto const& b = halfspaces[poly.edge_labels[i]];
        double const det = cross(a.normal, b.normal);
        if (std::abs(det) < 1e-8)
            continue;
        poly.vertices[i] = Vec2(a.offset * b.normal.y() - b.offset * a.normal.y(),
                                b.offset * a.normal.x() - a.offset * b.normal.x())
                           / det;
    }
    if (label.empty())
        label = "polygon(" + std::to_string(halfspaces.size()) + ")";
    HalfspacePolytope hp{std::move(halfspaces), std::move(poly.vertices)};
    return ConvexBody(2, std::move(hp), std::move(label));
}

ConvexBody make_cube(int dim)
{
    return ConvexBody(dim, Cube{}, "cube(" + std::to_string(dim) + ")");
}

ConvexBody make_cross_polytope(int dim)
{
    return ConvexBody(dim, CrossPolytope{},
                      "cross_polytope(" + std::to_string(dim) + ")");
}

//---------------------------------------------------------------------------//
// Evaluation
//---------------------------------------------------------------------------//

double support(ConvexBody const& body, Direction const& u)
{
    if (u.dim() != body.dim())
        fail(ErrorCode::precondition, "direction dimension mismatch");
    Vec const& x = u.coords();
    double const h = std::visit(
        Overloaded{
            [&](Ellipsoid const& e) { return std::sqrt(x.dot(e.shape * x)); },
            [&](PlanarSupport const& p) { return p.h(u.angle()); },
            [&](PiecewiseArc const& pa) {
                double const t = u.angle();
                return arc_jet(pa.arcs[find_arc(pa, t)], t).h;
            },
            [&](HalfspacePolytope const& hp) {
                double best = -std::numeric_limits<double>::infinity();
                Vec2 const v(x[0], x[1]);
                for (auto const& p : hp.vertices)
                    best = std::max(best, p.dot(v));
                return best;
            },
            [&](Cube const&) { return x.lpNorm<1>(); },
            [&](CrossPolytope const&) { return x.lpNorm<Eigen::Infinity>(); },
        },
        body.data());
    if (!(h > 0))
        fail(ErrorCode::precondition, "origin is not interior to the body");
    return h;
}

PlanarJet planar_jet(ConvexBody const& body, double theta)
{
    return std::visit(
        Overloaded{
            [&](Ellipsoid const& e) {
                if (body.dim() != 2)
                    fail(ErrorCode::unsupported_kind, "planar jet needs n = 2");
                return ellipse_jet(e.shape, theta);
            },
            [&](PlanarSupport const& p) { return p.h.jet(theta); },
            [&](PiecewiseArc const& pa) {
                return arc_jet(pa.arcs[find_arc(pa, theta)], theta);
            },
            [&](auto const&) -> PlanarJet {
                fail(ErrorCode::unsupported_kind,
                     std::string("no support-function jet for ")
                         + to_string(body.kind()));
            },
        },
        body.data());
}

Vec2 planar_point(PlanarJet const& jet, double theta)
{
    return jet.h * unit(theta) + jet.dh * unit_perp(theta);
}

BoundaryPoint boundary_point(ConvexBody const& body, Direction const& u)
{
    require_smooth(body, "boundary point");
    if (u.dim() != body.dim())
        fail(ErrorCode::precondition, "direction dimension mismatch");
    if (body.kind() == BodyKind::ellipsoid)
    {
        auto const& e = body.as<Ellipsoid>();
        Vec const au = e.shape * u.coords();
        double const h = std::sqrt(u.coords().dot(au));
        double const f = e.det_shape / std::pow(h, body.dim() + 1);
        return {au / h, u, h, f};
    }
    double const t = u.angle();
    auto const j = planar_jet(body, t);
    Vec2 const x = planar_point(j, t);
    return {Vec(x), u, j.h, j.curvature_fn()};
}

double curvature_function(ConvexBody const& body, Direction const& u)
{
    require_smooth(body, "curvature function");
    if (body.kind() == BodyKind::ellipsoid)
    {
        auto const& e = body.as<Ellipsoid>();
        double const h = std::sqrt(u.coords().dot(e.shape * u.coords()));
        return e.det_shape / std::pow(h, body.dim() + 1);
    }
    if (body.kind() == BodyKind::piecewise_arc)
    {
        auto const& pa = body.as<PiecewiseArc>();
        return pa.arcs[find_arc(pa, u.angle())].radius;
    }
    return planar_jet(body, u.angle()).curvature_fn();
}

double boundary_curvature(ConvexBody const& body, Direction const& u)
{
    require_smooth(body, "boundary curvature");
    switch (body.kind())
    {
        case BodyKind::ellipsoid: {
            // level set x^t A^{-1} x = 1 with gradient A^{-1} x
            auto const& e = body.as<Ellipsoid>();
            Vec const au = e.shape * u.coords();
            Vec const x = au / std::sqrt(u.coords().dot(au));
            Vec const g = e.shape_inv * x;
            return 1
                   / (e.det_shape * std::pow(g.squaredNorm(),
                                             0.5 * (body.dim() + 1)));
        }
        case BodyKind::piecewise_arc: {
            auto const& pa = body.as<PiecewiseArc>();
            return 1 / pa.arcs[find_arc(pa, u.angle())].radius;
        }
        default: {
            // curve x(theta): x' = f u_perp, x'' = f' u_perp - f u
            double const t = u.angle();
            auto const j = planar_jet(body, t);
            double const f = j.curvature_fn();
            double const df = j.dh + j.d3h;
            Vec2 const d1 = f * unit_perp(t);
            Vec2 const d2 = df * unit_perp(t) - f * unit(t);
            return cross(d1, d2) / std::pow(d1.norm(), 3);
        }
    }
}

double radial(ConvexBody const& body, Direction const& u)
{
    if (u.dim() != body.dim())
        fail(ErrorCode::precondition, "direction dimension mismatch");
    Vec const& x = u.coords();
    return std::visit(
        Overloaded{
            [&](Ellipsoid const& e) {
                return 1 / std::sqrt(x.dot(e.shape_inv * x));
            },
            [&](HalfspacePolytope const& hp) {
                double worst = 0;
                Vec2 const v(x[0], x[1]);
                for (auto const& hs : hp.halfspaces)
                    worst = std::max(worst, hs.normal.dot(v) / hs.offset);
                return 1 / worst;
            },
            [&](Cube const&) { return 1 / x.lpNorm<Eigen::Infinity>(); },
            [&](CrossPolytope const&) { return 1 / x.lpNorm<1>(); },
            [&](auto const&) { return planar_radial(body, u.angle()); },
        },
        body.data());
}

double polar_support(ConvexBody const& body, Direction const& v,
                     SphereGrid const& grid)
{
    if (grid.size() < 8)
        fail(ErrorCode::config, "polar support needs at least 8 grid nodes");
    if (grid.dim() != body.dim())
        fail(ErrorCode::config, "grid dimension does not match the body");
    // seed: best grid direction for <u, v> / h(u)
    double seed = 0;
    for (auto const& u : grid.nodes())
    {
        double const c = u.coords().dot(v.coords());
        if (c > 0)
            seed = std::max(seed, c / support(body, u));
    }
    // the maximum is attained at the boundary normal of the radial point
    // of K in direction v, where it equals 1 / rho_K(v)
    return std::max(seed, 1 / radial(body, v));
}

PeriodicFit fit_periodic(std::function<double(double)> const& g)
{
    PeriodicFit best;
    best.residual = std::numeric_limits<double>::infinity();
    for (int harmonics : {64, 128, 256, 512})
    {
        int const m = 4 * harmonics;
        std::vector<double> samples(m);
        double const dt = two_pi / m;
        for (int j = 0; j < m; ++j)
            samples[j] = g(dt * j);
        auto series = FourierSeries::fit(samples, harmonics);
        double residual = 0;
        for (int j = 0; j < m; ++j)
        {
            double const t = dt * (j + 0.5);
            residual = std::max(residual, std::abs(series(t) - g(t)));
        }
        if (residual < best.residual)
        {
            best.series = std::move(series);
            best.residual = residual;
        }
        if (best.residual < 1e-11)
            break;
    }
    return best;
}

ConvexBody polar_body(ConvexBody const& body)
{
    std::string const label = "polar(" + body.label() + ")";
    switch (body.kind())
    {
        case BodyKind::ellipsoid: {
            auto const& e = body.as<Ellipsoid>();
            Mat const t = e.transform.inverse().transpose();
            return ConvexBody(body.dim(), ellipsoid_from_transform(t), label)
                .with_fit("closed-form", 0, 0);
        }
        case BodyKind::cube:
            return make_cross_polytope(body.dim()).with_fit("closed-form", 0, 0);
        case BodyKind::cross_polytope:
            return make_cube(body.dim()).with_fit("closed-form", 0, 0);
        case BodyKind::halfspace_polytope: {
            // vertex duality: vertices v_j give halfplanes <v_j, y> <= 1
            std::vector<Halfspace> hs;
            for (auto const& v : body.as<HalfspacePolytope>().vertices)
                hs.push_back({v, 1.0});
            return make_halfspace_polytope(std::move(hs), label)
                .with_fit("vertex-duality", 0, 0);
        }
        case BodyKind::planar_support:
        case BodyKind::piecewise_arc: {
            auto fit = fit_periodic(
                [&body](double t) { return 1 / planar_radial(body, t); });
            int const harmonics = fit.series.harmonics();
            // the polar of a piecewise arc body is only C^{1,1}
            bool const smooth = body.kind() == BodyKind::planar_support;
            return make_planar_support(std::move(fit.series), label, smooth)
                .with_fit("fourier-fit", fit.residual, harmonics);
        }
    }
    fail(ErrorCode::internal, "unknown body kind");
}

double volume(ConvexBody const& body)
{
    int const n = body.dim();
    return std::visit(
        Overloaded{
            [&](Ellipsoid const& e) {
                return unit_ball_volume(n) * std::sqrt(e.det_shape);
            },
            [&](PlanarSupport const& p) {
                double sum = pi * p.h.constant() * p.h.constant();
                auto const& a = p.h.cos_coeffs();
                auto const& b = p.h.sin_coeffs();
                for (std::size_t i = 0; i < a.size(); ++i)
                {
                    double const k = static_cast<double>(i + 1);
                    sum += 0.5 * pi * (1 - k * k) * (a[i] * a[i] + b[i] * b[i]);
                }
                return sum;
            },
            [&](PiecewiseArc const& pa) {
                // (1/2) \int h f d theta per arc, h = <c, u> + r, f = r
                NeumaierSum sum;
                for (auto const& arc : pa.arcs)
                {
                    double const a = arc.normal_begin;
                    double const b = arc.normal_end;
                    double const r = arc.radius;
                    sum.add(0.5 * r
                            * (r * (b - a)
                               + arc.center.x() * (std::sin(b) - std::sin(a))
                               - arc.center.y() * (std::cos(b) - std::cos(a))));
                }
                return sum.value();
            },
            [&](HalfspacePolytope const& hp) {
                return polygon_area(hp.vertices);
            },
            [&](Cube const&) { return std::pow(2.0, n); },
            [&](CrossPolytope const&) {
                return std::pow(2.0, n) / std::tgamma(n + 1.0);
            },
        },
        body.data());
}

double volume_radial(ConvexBody const& body, SphereGrid const& grid)
{
    if (grid.dim() != body.dim())
        fail(ErrorCode::config, "grid dimension does not match the body");
    int const n = body.dim();
    auto const r = integrate(
        [&](Direction const& u) { return std::pow(radial(body, u), n); }, grid);
    return r.value / n;
}

ConvexBody linear_image(ConvexBody const& body, LinearMap const& map)
{
    if (map.matrix.rows() != body.dim())
        fail(ErrorCode::precondition, "linear map dimension mismatch");
    std::string const label = "image(" + body.label() + ")";
    switch (body.kind())
    {
        case BodyKind::ellipsoid: {
            Mat const t = map.matrix * body.as<Ellipsoid>().transform;
            return ConvexBody(body.dim(), ellipsoid_from_transform(t), label);
        }
        case BodyKind::planar_support: {
            // h_{TK}(u) = h_K(T^t u), homogeneous of degree 1
            Eigen::Matrix2d const tt = map.matrix.transpose();
            auto const& h = body.as<PlanarSupport>().h;
            auto fit = fit_periodic([&](double t) {
                Vec2 const w = tt * unit(t);
                return w.norm() * h(std::atan2(w.y(), w.x()));
            });
            int const harmonics = fit.series.harmonics();
            return make_planar_support(std::move(fit.series), label)
                .with_fit("fourier-fit", fit.residual, harmonics);
        }
        default:
            fail(ErrorCode::unsupported_kind,
                 std::string("linear image is not implemented for ")
                     + to_string(body.kind()));
    }
}

DualityResidual curvature_duality_check(ConvexBody const& body,
                                        ConvexBody const& polar,
                                        Direction const& u)
{
    require_smooth(body, "curvature duality");
    require_smooth(polar, "curvature duality");
    int const n = body.dim();
    auto const y = boundary_point(body, u);
    Direction const ny(y.position);
    auto const x = boundary_point(polar, ny);

    double const kappa = 1 / y.curvature_fn;
    double const kappa_polar = 1 / x.curvature_fn;
    double const lhs = y.position.dot(u.coords()) * x.position.dot(ny.coords());
    double const rhs = std::pow(kappa * kappa_polar, 1.0 / (n + 1));

    DualityResidual out;
    out.residual = std::abs(lhs - rhs) / rhs;
    out.polar_fit_residual = polar.fit_residual();
    out.degraded = polar.fit_residual() > 1e-8;
    return out;
}

DualityResidual
curvature_duality_check(ConvexBody const& body, Direction const& u)
{
    return curvature_duality_check(body, polar_body(body), u);
}

ConvexBody translated(ConvexBody const& body, Vec2 const& shift)
{
    switch (body.kind())
    {
        case BodyKind::planar_support:
            return make_planar_support(
                body.as<PlanarSupport>().h.translated(-shift.x(), -shift.y()),
                body.label());
        case BodyKind::piecewise_arc: {
            auto arcs = body.as<PiecewiseArc>().arcs;
            for (auto& a : arcs)
                a.center += shift;
            return make_piecewise_arc(std::move(arcs), body.label());
        }
        case BodyKind::halfspace_polytope: {
            auto hs = body.as<HalfspacePolytope>().halfspaces;
            for (auto& h : hs)
                h.offset += h.normal.dot(shift);
            return make_halfspace_polytope(std::move(hs), body.label());
        }
        default:
            fail(ErrorCode::unsupported_kind,
                 std::string("translation is not implemented for ")
                     + to_string(body.kind()));
    }
}

Vec2 centroid(ConvexBody const& body)
{
    switch (body.kind())
    {
        case BodyKind::ellipsoid:
        case BodyKind::cube:
        case BodyKind::cross_polytope: return Vec2::Zero();
        case BodyKind::halfspace_polytope: {
            auto const& v = body.as<HalfspacePolytope>().vertices;
            Vec2 c = Vec2::Zero();
            double area = 0;
            for (std::size_t i = 0; i < v.size(); ++i)
            {
                auto const& a = v[i];
                auto const& b = v[(i + 1) % v.size()];
                double const w = cross(a, b);
                area += w;
                c += w * (a + b);
            }
            return c / (3 * area);
        }
        default: break;
    }
    // \int_K x dx = (1/3) \int x <x, N> d mu over the boundary curve
    auto moment = [&body](double t) -> Vec2 {
        auto const j = planar_jet(body, t);
        return planar_point(j, t) * (j.h * j.curvature_fn());
    };
    Vec2 sum = Vec2::Zero();
    if (body.kind() == BodyKind::piecewise_arc)
    {
        for (auto const& arc : body.as<PiecewiseArc>().arcs)
        {
            for (int c = 0; c < 2; ++c)
            {
                sum[c] += integrate_panel(
                    [&](double t) { return moment(t)[c]; }, arc.normal_begin,
                    arc.normal_end);
            }
        }
    }
    else
    {
        double const dt = two_pi / validation_grid;
        for (int i = 0; i < validation_grid; ++i)
            sum += moment(dt * i) * dt;
    }
    return sum / (3 * volume(body));
}

ConvexBody recentered(ConvexBody const& body)
{
    Vec2 const c = centroid(body);
    if (c.isZero(0))
        return body;
    return translated(body, -c);
}

std::vector<double> planar_breakpoints(ConvexBody const& body)
{
    std::vector<double> out;
    if (body.kind() == BodyKind::piecewise_arc)
    {
        for (auto const& a : body.as<PiecewiseArc>().arcs)
            out.push_back(a.normal_begin);
    }
    return out;
}

std::vector<Vec2> planar_vertices(ConvexBody const& body)
{
    require_planar(body, "polygon vertices");
    switch (body.kind())
    {
        case BodyKind::cube: return cube_vertices();
        case BodyKind::cross_polytope: return cross_vertices();
        case BodyKind::halfspace_polytope:
            return body.as<HalfspacePolytope>().vertices;
        default:
            fail(ErrorCode::unsupported_kind,
                 std::string("no vertices for ") + to_string(body.kind()));
    }
}

}  // namespace lpasa
