#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bodies.hpp"
#include "quadrature.hpp"

namespace lpasa
{
//! Halfplane {<x, u> >= h(u) - offset_drop} cutting off \c measure.
struct CapCut
{
    Direction direction;
    double offset_drop = 0;
    double measure = 0;
};

/*!
 * Intersection of the halfplanes <x, u_i> <= h(u_i) - drop_i for equally
 * spaced u_i. Edge labels index the directions that contribute an edge.
 */
struct InnerBodyApprox
{
    std::vector<Halfspace> halfspaces;
    std::vector<double> supports;  //!< h_K(u_i)
    std::vector<double> drops;     //!< drop_i
    std::vector<Vec2> vertices;
    std::vector<int> edge_labels;
    double parameter = 0;
    int direction_count = 0;
};

//! Positive weight on the boundary, indexed by outer normal.
struct BoundaryWeight
{
    std::function<double(Direction const&)> fn;
    std::optional<double> constant;
    std::string label;

    double operator()(Direction const& u) const
    {
        return constant ? *constant : fn(u);
    }
};

BoundaryWeight weight_constant(double c);

//! The f_p weight of \p body (smooth bodies only).
BoundaryWeight weight_fp(ConvexBody const& body, double p);

//! c_n = 2 (|B^{n-1}| / (n+1))^{2/(n+1)}
double floating_constant(int dim);

//! beta_n = 2 |B^{n-1}|^{2/(n-1)}
double surface_constant(int dim);

CapCut cap_volume_offset(ConvexBody const& body, Direction const& u,
                         double delta);

InnerBodyApprox floating_body(ConvexBody const& body, double delta,
                              int direction_count);

//! Smooth bodies: continuous root of the weighted boundary measure. Polygons
//! (constant weights only): the largest drop whose cap measure is <= s,
//! which is 0 in facet directions.
CapCut surface_cap_offset(ConvexBody const& body, Direction const& u,
                          BoundaryWeight const& weight, double s);

InnerBodyApprox surface_body(ConvexBody const& body,
                             BoundaryWeight const& weight, double s,
                             int direction_count);

enum class PolarReference
{
    sampled,  //!< |conv(u_i / h_K(u_i))|, same directions as the inner body
    exact,    //!< volume(polar_body(outer))
};

//! |inner°| - |outer°|.
double polar_volume_deficit(ConvexBody const& outer,
                            InnerBodyApprox const& inner,
                            PolarReference reference = PolarReference::sampled);

struct LimitSample
{
    double parameter = 0;
    double deficit = 0;
    double ratio = 0;
};

struct LimitEstimate
{
    std::vector<LimitSample> samples;
    double extrapolated = 0;
    double fitted_exponent = 0;
    double rate = 0;
    bool divergent = false;
    std::optional<double> target;
    std::optional<double> target_error;
    std::optional<double> relative_gap;
    std::optional<double> cross_target;
    std::optional<double> cross_gap;
    std::string note;
    std::string grid;
    int direction_count = 0;
};

//! Geometric schedule start / ratio^k, k = 0..count-1.
std::vector<double> geometric_schedule(double start, double ratio, int count);

//! c_n (|K_delta°| - |K°|) / delta^{2/(n+1)}; targets as_{-n/(n+2)}(K°) and
//! as_{-n(n+2)}(K) for smooth bodies.
LimitEstimate floating_limit(ConvexBody const& body,
                             std::vector<double> const& schedule,
                             int direction_count, SphereGrid const& grid);

//! beta_n (|K_{f,s}°| - |K°|) / s^{2/(n-1)}; target
//! \int d sigma / (h^{n+1} f_K^{1/(n-1)} f^{2/(n-1)}).
LimitEstimate surface_limit(ConvexBody const& body,
                            BoundaryWeight const& weight,
                            std::vector<double> const& schedule,
                            int direction_count, SphereGrid const& grid);

struct CubeExample
{
    double delta = 0;
    double polar_volume = 0;   //!< |K_1°|
    double deficit_bound = 0;  //!< |K_1°| - 2^n/n!, a lower bound
    double ratio = 0;          //!< deficit_bound / delta^{2/(n+1)}
};

//! Closed form for the cube cut by the hyperplane through the corner
//! simplex of volume delta.
CubeExample cube_counterexample(int dim, double delta);

}  // namespace lpasa
