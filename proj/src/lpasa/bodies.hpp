#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "direction.hpp"
#include "fourier.hpp"
#include "quadrature.hpp"

namespace lpasa
{
//---------------------------------------------------------------------------//
// Representations
//---------------------------------------------------------------------------//

//! E = T(B), stored with A = T T^t and its inverse.
struct Ellipsoid
{
    Mat transform;
    Mat shape;
    Mat shape_inv;
    double det_shape = 0;  //!< det A = (det T)^2
};

//! Planar body given by a truncated Fourier series of h(theta).
struct PlanarSupport
{
    FourierSeries h;
};

//! Circular arc swept by outer normals normal_begin..normal_end (radians).
struct Arc
{
    Vec2 center;
    double radius = 0;
    double normal_begin = 0;
    double normal_end = 0;
};

//! Closed planar curve of arcs with contiguous, increasing normal spans
//! covering exactly one turn.
struct PiecewiseArc
{
    std::vector<Arc> arcs;
};

struct Halfspace
{
    Vec2 normal;  //!< unit outer normal
    double offset = 0;
};

//! Planar polygon {x : <n_i, x> <= b_i}; vertices are counterclockwise.
struct HalfspacePolytope
{
    std::vector<Halfspace> halfspaces;
    std::vector<Vec2> vertices;
};

//! [-1, 1]^n
struct Cube
{
};

//! Unit ball of the l1 norm.
struct CrossPolytope
{
};

enum class BodyKind
{
    ellipsoid,
    planar_support,
    piecewise_arc,
    halfspace_polytope,
    cube,
    cross_polytope,
};

char const* to_string(BodyKind kind);

/*!
 * Immutable convex body with the origin in its interior.
 *
 * The label is a short human-readable descriptor used in reports. Bodies
 * produced numerically (fitted polars, refit linear images) carry the
 * method and the maximum fit residual so that downstream tolerances can
 * account for them.
 */
class ConvexBody
{
  public:
    using Data = std::variant<Ellipsoid, PlanarSupport, PiecewiseArc,
                              HalfspacePolytope, Cube, CrossPolytope>;

    ConvexBody(int dim, Data data, std::string label);

    BodyKind kind() const { return static_cast<BodyKind>(data_.index()); }
    int dim() const { return dim_; }
    Data const& data() const { return data_; }

    template<class T>
    T const& as() const
    {
        return std::get<T>(data_);
    }

    //! Inverse Gauss map and curvature function are available.
    bool is_smooth() const;
    bool is_polytope() const { return !this->is_smooth(); }

    std::string const& label() const { return label_; }
    std::string const& method() const { return method_; }
    double fit_residual() const { return fit_residual_; }
    int fit_harmonics() const { return fit_harmonics_; }

    ConvexBody with_label(std::string label) const;
    ConvexBody with_fit(std::string method, double residual,
                        int harmonics) const;

  private:
    int dim_;
    Data data_;
    std::string label_;
    std::string method_ = "exact";
    double fit_residual_ = 0;
    int fit_harmonics_ = 0;
};

struct BoundaryPoint
{
    Vec position;
    Direction normal;
    double support_value;
    double curvature_fn;
};

struct LinearMap
{
    Mat matrix;
    double determinant = 0;
};

//! Throws a precondition error when |det| < 1e-14.
LinearMap make_linear_map(Mat matrix);

//---------------------------------------------------------------------------//
// Construction
//---------------------------------------------------------------------------//

//! Semi-axes along the columns of \p orientation (identity if empty).
ConvexBody make_ellipsoid(std::vector<double> const& semi_axes,
                          Mat const& orientation = Mat());
ConvexBody make_ball(int dim, double radius = 1);

//! Rejects bodies with h <= 0 or h + h'' <= 0 on a 4096-point grid unless
//! \p validate is false (used for fitted polars of non-smooth bodies).
ConvexBody make_planar_support(FourierSeries h, std::string label = {},
                               bool validate = true);

ConvexBody make_piecewise_arc(std::vector<Arc> arcs, std::string label = {});

//! Intersection of four discs of radius R centered at -(R - 1) e for the
//! four axis directions e, with corners rounded by tangent circles of
//! radius eps.
ConvexBody make_rounded_intersection(double big_radius, double eps);

ConvexBody make_halfspace_polytope(std::vector<Halfspace> halfspaces,
                                   std::string label = {});
ConvexBody make_cube(int dim);
ConvexBody make_cross_polytope(int dim);

//---------------------------------------------------------------------------//
// Evaluation
//---------------------------------------------------------------------------//

double support(ConvexBody const& body, Direction const& u);
BoundaryPoint boundary_point(ConvexBody const& body, Direction const& u);
double curvature_function(ConvexBody const& body, Direction const& u);

//! Gaussian curvature at the boundary point with normal u, computed from
//! the boundary geometry (implicit surface or curve derivatives) rather than
//! from the curvature function.
double boundary_curvature(ConvexBody const& body, Direction const& u);

double radial(ConvexBody const& body, Direction const& u);

//! h_{K°}(v); the grid seeds the maximization of <u, v> / h_K(u).
double polar_support(ConvexBody const& body, Direction const& v,
                     SphereGrid const& grid);

ConvexBody polar_body(ConvexBody const& body);

//! Closed-form volume: products for ellipsoids and boxes, the Fourier
//! identity |K| = pi a0^2 + (pi/2) sum (1 - k^2)(a_k^2 + b_k^2), per-arc
//! sector sums and the shoelace formula.
double volume(ConvexBody const& body);

//! Quadrature volume (1/n) \int rho^n d sigma, an independent cross-check.
double volume_radial(ConvexBody const& body, SphereGrid const& grid);

ConvexBody linear_image(ConvexBody const& body, LinearMap const& map);

struct DualityResidual
{
    double residual = 0;
    double polar_fit_residual = 0;
    bool degraded = false;
};

/*!
 * Relative residual of <y, N_K(y)> <x, N_K°(x)> = (kappa_K kappa_K°)^{1/(n+1)}
 * at y = N_K^{-1}(u) and the point x of the polar boundary with normal
 * y / |y|. Pass a precomputed polar to avoid refitting.
 */
DualityResidual curvature_duality_check(ConvexBody const& body,
                                        ConvexBody const& polar,
                                        Direction const& u);
DualityResidual curvature_duality_check(ConvexBody const& body,
                                        Direction const& u);

//! Translate a planar support body by \p shift.
ConvexBody translated(ConvexBody const& body, Vec2 const& shift);

//! Numerically computed centroid (planar smooth bodies).
Vec2 centroid(ConvexBody const& body);

//! Translate so that the centroid sits at the origin.
ConvexBody recentered(ConvexBody const& body);

//---------------------------------------------------------------------------//
// Planar helpers
//---------------------------------------------------------------------------//

//! Support function and derivatives at normal angle theta (smooth n = 2).
PlanarJet planar_jet(ConvexBody const& body, double theta);

//! x(theta) = h u + h' u_perp
Vec2 planar_point(PlanarJet const& jet, double theta);

//! Normal angles where the curvature function may jump (arc junctions).
std::vector<double> planar_breakpoints(ConvexBody const& body);

//! Counterclockwise vertices of a planar polytope kind.
std::vector<Vec2> planar_vertices(ConvexBody const& body);

//! Adaptive Fourier fit of a smooth 2 pi-periodic function: harmonics
//! 64, 128, 256, 512 with 4H samples, stopping once the off-sample residual
//! is below 1e-11.
struct PeriodicFit
{
    FourierSeries series;
    double residual = 0;
};

PeriodicFit fit_periodic(std::function<double(double)> const& g);

}  // namespace lpasa
