#pragma once

#include <string>
#include <vector>

#include "bodies.hpp"
#include "quadrature.hpp"

namespace lpasa
{
// Exponents are plain doubles; +inf and -inf both select the polar-volume
// endpoint, which is stored as a single value.

enum class AsaMethod
{
    sphere_form,
    boundary_form,
    sup_form,
    closed_form,
};

char const* to_string(AsaMethod method);

struct AsaValue
{
    double p = 0;
    double value = 0;  //!< +inf when divergent
    bool divergent = false;
    AsaMethod method = AsaMethod::sphere_form;
    double error_estimate = 0;
    std::string grid;    //!< grid description, empty for closed forms
    std::string caveat;  //!< set for conventions rather than computations
};

//! Rejects NaN and |n + p| < 1e-6.
void check_exponent(double p, int dim);

//! Exponents (a, b) of the sphere-form integrand f^a h^b.
std::pair<double, double> sphere_exponents(double p, int dim);

//! Exponents (a, b) of the boundary integrand kappa^a <x, N>^b.
std::pair<double, double> boundary_exponents(double p, int dim);

//! Default grid, switching to Gauss-Legendre panels between arc junctions
//! for piecewise arc bodies.
SphereGrid grid_for_body(ConvexBody const& body, std::uint64_t seed = 0);

/*!
 * Support and curvature function values on a grid (and its coarsened
 * version when the error estimate needs it), so that many exponents can be
 * evaluated on one body without re-evaluating the body.
 */
class BodySamples
{
  public:
    BodySamples(ConvexBody body, SphereGrid grid);

    ConvexBody const& body() const { return body_; }
    SphereGrid const& grid() const { return grid_; }

    AsaValue sphere_form(double p) const;
    AsaValue infinity() const;

  private:
    ConvexBody body_;
    SphereGrid grid_;
    std::vector<double> h_;
    std::vector<double> f_;
    std::vector<double> coarse_h_;
    std::vector<double> coarse_f_;
};

//! as_p by the S^{n-1} integral of f^{n/(n+p)} h^{-n(p-1)/(n+p)}; polytopes
//! follow the documented convention (see README).
AsaValue asa_sphere_form(ConvexBody const& body, double p,
                         SphereGrid const& grid);

//! as_p by the boundary integral pushed to the sphere with d mu = f d sigma.
AsaValue asa_boundary_form(ConvexBody const& body, double p,
                           SphereGrid const& grid);

//! \int h^{-n} d sigma = n |K°| (closed form for polytopes).
AsaValue asa_infinity(ConvexBody const& body, SphereGrid const& grid);

//! max f^{1/2} h^{(n+1)/2}, refined by golden-section search in n = 2.
AsaValue asa_minus_n(ConvexBody const& body, SphereGrid const& grid);

//! Sphere form, infinity endpoint, or the p = -n sup form.
AsaValue asa(ConvexBody const& body, double p, SphereGrid const& grid);

//! kappa^{(n^2+p)/(2(n+p))} <y, N>^{-(n-1)(n^2+2n+p)/(2(n+p))} at the
//! boundary point with normal u.
double f_p_weight(ConvexBody const& body, double p, Direction const& u);

}  // namespace lpasa
