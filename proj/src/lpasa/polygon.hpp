#pragma once

#include <vector>

#include "direction.hpp"

namespace lpasa
{
/*!
 * Convex polygon with counterclockwise vertices.
 *
 * Edge i runs from vertex i to vertex i+1 and carries the label of the
 * halfplane that produced it (-1 for the initial bounding box).
 */
struct LabeledPolygon
{
    std::vector<Vec2> vertices;
    std::vector<int> edge_labels;

    bool empty() const { return vertices.size() < 3; }
};

//! Axis-aligned square [-half, half]^2.
LabeledPolygon bounding_square(double half);

//! Keep the part with <normal, x> <= offset. Vertices closer than 1e-12 are
//! merged and edges shorter than that are dropped.
LabeledPolygon clip(LabeledPolygon const& poly, Vec2 const& normal,
                    double offset, int label);

//! Keep the part with <normal, x> >= offset.
LabeledPolygon clip_above(LabeledPolygon const& poly, Vec2 const& normal,
                          double offset);

double polygon_area(std::vector<Vec2> const& vertices);
double polygon_perimeter(std::vector<Vec2> const& vertices);

//! Signed-distance test: every vertex satisfies <n, v> <= b + tol.
bool polygon_inside(std::vector<Vec2> const& vertices, Vec2 const& normal,
                    double offset, double tol);

//! Is the origin strictly inside?
bool contains_origin(std::vector<Vec2> const& vertices);

}  // namespace lpasa
