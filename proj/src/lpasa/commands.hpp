#pragma once

#include <string>
#include <vector>

#include "bodies.hpp"
#include "inequalities.hpp"
#include "quadrature.hpp"
#include "table.hpp"

namespace lpasa
{
//! "default" or empty selects grid_for_body; otherwise parse_grid.
SphereGrid resolve_grid(ConvexBody const& body, std::string const& spec,
                        std::uint64_t seed);

//! One row per exponent; smooth bodies also get the boundary form and the
//! relative agreement between the two. p = -n is rejected.
Table asp_table(ConvexBody const& body, std::vector<double> const& ps,
                SphereGrid const& grid);

//! as_p(K) against as_{n^2/p}(K°) for each exponent (smooth bodies).
Table duality_table(ConvexBody const& body, std::vector<double> const& ps,
                    SphereGrid const& grid);

//! One row per schedule value; the estimate columns repeat on every row.
Table floating_table(ConvexBody const& body, std::vector<double> const& schedule,
                     int direction_count, SphereGrid const& grid);

//! Surface-body limit with the f_p weight for each exponent, or the
//! constant weight 1 when \p ps is empty.
Table surface_table(ConvexBody const& body, std::vector<double> const& ps,
                    std::vector<double> const& schedule, int direction_count,
                    SphereGrid const& grid);

Table suite_table(SuiteConfig const& config);

//! Closed-form cube cut ratios plus the log-log slope over all of them.
Table cube_table(int dim, std::vector<double> const& deltas);

Table rounded_table(double big_radius, double eps, std::vector<double> const& ps);

}  // namespace lpasa
