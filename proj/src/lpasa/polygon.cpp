#include "polygon.hpp"

#include <cmath>

#include "quadrature.hpp"

namespace lpasa
{
namespace
{
constexpr double merge_tol = 1e-12;

}  // namespace

LabeledPolygon bounding_square(double half)
{
    LabeledPolygon p;
    p.vertices = {{-half, -half}, {half, -half}, {half, half}, {-half, half}};
    p.edge_labels = {-1, -1, -1, -1};
    return p;
}

LabeledPolygon clip(LabeledPolygon const& poly, Vec2 const& normal,
                    double offset, int label)
{
    LabeledPolygon out;
    auto const n = poly.vertices.size();
    if (n == 0)
        return out;

    auto push = [&out](Vec2 const& v, int edge_label) {
        if (!out.vertices.empty()
            && (out.vertices.back() - v).norm() < merge_tol)
        {
            // merged vertex keeps the label of the later edge
            out.edge_labels.back() = edge_label;
            return;
        }
        out.vertices.push_back(v);
        out.edge_labels.push_back(edge_label);
    };

    for (std::size_t i = 0; i < n; ++i)
    {
        Vec2 const& a = poly.vertices[i];
        Vec2 const& b = poly.vertices[(i + 1) % n];
        double const da = normal.dot(a) - offset;
        double const db = normal.dot(b) - offset;
        int const edge = poly.edge_labels[i];
        if (da <= 0)
        {
            if (db <= 0)
            {
                push(a, edge);
            }
            else
            {
                // leaving: keep a, then the crossing starts the new edge
                push(a, edge);
                Vec2 const x = a + (da / (da - db)) * (b - a);
                push(x, label);
            }
        }
        else if (db <= 0)
        {
            // entering
            Vec2 const x = a + (da / (da - db)) * (b - a);
            push(x, edge);
        }
    }
    // close the ring
    while (out.vertices.size() > 1
           && (out.vertices.back() - out.vertices.front()).norm() < merge_tol)
    {
        out.vertices.pop_back();
        out.edge_labels.pop_back();
    }
    if (out.vertices.size() < 3)
        return {};
    return out;
}

LabeledPolygon clip_above(LabeledPolygon const& poly, Vec2 const& normal,
                          double offset)
{
    return clip(poly, -normal, -offset, -2);
}

double polygon_area(std::vector<Vec2> const& vertices)
{
    NeumaierSum sum;
    auto const n = vertices.size();
    for (std::size_t i = 0; i < n; ++i)
        sum.add(cross(vertices[i], vertices[(i + 1) % n]));
    return 0.5 * sum.value();
}

double polygon_perimeter(std::vector<Vec2> const& vertices)
{
    NeumaierSum sum;
    auto const n = vertices.size();
    for (std::size_t i = 0; i < n; ++i)
        sum.add((vertices[(i + 1) % n] - vertices[i]).norm());
    return sum.value();
}

bool polygon_inside(std::vector<Vec2> const& vertices, Vec2 const& normal,
                    double offset, double tol)
{
    for (auto const& v : vertices)
    {
        if (normal.dot(v) > offset + tol)
            return false;
    }
    return true;
}

bool contains_origin(std::vector<Vec2> const& vertices)
{
    auto const n = vertices.size();
    if (n < 3)
        return false;
    for (std::size_t i = 0; i < n; ++i)
    {
        if (cross(vertices[(i + 1) % n] - vertices[i], -vertices[i]) <= 0)
            return false;
    }
    return true;
}

}  // namespace lpasa
