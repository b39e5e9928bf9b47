#include "body_json.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "error.hpp"
#include "inequalities.hpp"

namespace lpasa
{
namespace
{
using json = nlohmann::json;

json const& field(json const& obj, char const* key)
{
    auto it = obj.find(key);
    if (it == obj.end())
        fail(ErrorCode::parse, std::string("missing field '") + key + "'");
    return *it;
}

double number(json const& obj, char const* key)
{
    auto const& v = field(obj, key);
    if (!v.is_number())
        fail(ErrorCode::parse, std::string("field '") + key + "' must be a number");
    double const x = v.get<double>();
    if (!std::isfinite(x))
        fail(ErrorCode::parse, std::string("field '") + key + "' must be finite");
    return x;
}

double number_or(json const& obj, char const* key, double fallback)
{
    return obj.contains(key) ? number(obj, key) : fallback;
}

int integer_or(json const& obj, char const* key, int fallback)
{
    if (!obj.contains(key))
        return fallback;
    auto const& v = obj[key];
    if (!v.is_number_integer())
        fail(ErrorCode::parse, std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

std::vector<double> numbers(json const& v, char const* what)
{
    if (!v.is_array())
        fail(ErrorCode::parse, std::string(what) + " must be an array");
    std::vector<double> out;
    for (auto const& x : v)
    {
        if (!x.is_number())
            fail(ErrorCode::parse, std::string(what) + " must contain numbers");
        out.push_back(x.get<double>());
        if (!std::isfinite(out.back()))
            fail(ErrorCode::parse, std::string(what) + " must be finite");
    }
    return out;
}

Vec2 vec2(json const& v, char const* what)
{
    auto xs = numbers(v, what);
    if (xs.size() != 2)
        fail(ErrorCode::parse, std::string(what) + " must have 2 entries");
    return Vec2(xs[0], xs[1]);
}

int dimension(json const& obj)
{
    int const n = integer_or(obj, "dim", 2);
    if (n < 2 || n > 64)
        fail(ErrorCode::parse, "dim must be in [2, 64]");
    return n;
}

ConvexBody ellipsoid(json const& obj)
{
    auto axes = numbers(field(obj, "semi_axes"), "semi_axes");
    auto const n = static_cast<int>(axes.size());
    Mat orient;
    if (obj.contains("orientation"))
    {
        auto const& rows = obj["orientation"];
        if (!rows.is_array() || static_cast<int>(rows.size()) != n)
            fail(ErrorCode::parse, "orientation must be an n x n array");
        orient.resize(n, n);
        for (int i = 0; i < n; ++i)
        {
            auto row = numbers(rows[i], "orientation row");
            if (static_cast<int>(row.size()) != n)
                fail(ErrorCode::parse, "orientation must be an n x n array");
            for (int j = 0; j < n; ++j)
                orient(i, j) = row[j];
        }
    }
    else if (obj.contains("angle"))
    {
        if (n != 2)
            fail(ErrorCode::parse, "angle is only valid for planar ellipses");
        double const a = number(obj, "angle");
        orient.resize(2, 2);
        orient << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
    }
    return make_ellipsoid(axes, orient);
}

ConvexBody planar_support(json const& obj)
{
    auto cos_c = obj.contains("cos") ? numbers(obj["cos"], "cos") : std::vector<double>{};
    auto sin_c = obj.contains("sin") ? numbers(obj["sin"], "sin") : std::vector<double>{};
    auto const h = std::max(cos_c.size(), sin_c.size());
    cos_c.resize(h, 0.0);
    sin_c.resize(h, 0.0);
    return make_planar_support(
        FourierSeries(number(obj, "a0"), std::move(cos_c), std::move(sin_c)));
}

ConvexBody piecewise_arc(json const& obj)
{
    auto const& list = field(obj, "arcs");
    if (!list.is_array())
        fail(ErrorCode::parse, "arcs must be an array");
    std::vector<Arc> arcs;
    for (auto const& a : list)
    {
        Arc arc;
        arc.center = vec2(field(a, "center"), "center");
        arc.radius = number(a, "radius");
        arc.normal_begin = number(a, "normal_begin");
        arc.normal_end = number(a, "normal_end");
        arcs.push_back(arc);
    }
    return make_piecewise_arc(std::move(arcs));
}

ConvexBody halfspace_polytope(json const& obj)
{
    auto const& list = field(obj, "halfspaces");
    if (!list.is_array())
        fail(ErrorCode::parse, "halfspaces must be an array");
    std::vector<Halfspace> hs;
    for (auto const& h : list)
        hs.push_back({vec2(field(h, "normal"), "normal"), number(h, "offset")});
    return make_halfspace_polytope(std::move(hs));
}

ConvexBody random_smooth(json const& obj)
{
    auto const& seed = field(obj, "seed");
    if (!seed.is_number_unsigned())
        fail(ErrorCode::parse, "seed must be a non-negative integer");
    EnsembleConfig d;
    return random_smooth_body(seed.get<std::uint64_t>(),
                              integer_or(obj, "harmonic_budget", d.harmonic_budget),
                              number_or(obj, "perturbation_scale", d.perturbation_scale));
}

ConvexBody build(json const& obj)
{
    if (!obj.is_object())
        fail(ErrorCode::parse, "body spec must be a JSON object");
    auto const& kind_v = field(obj, "kind");
    if (!kind_v.is_string())
        fail(ErrorCode::parse, "kind must be a string");
    auto const kind = kind_v.get<std::string>();

    if (kind == "ellipsoid")
        return ellipsoid(obj);
    if (kind == "ball")
        return make_ball(dimension(obj), number_or(obj, "radius", 1.0));
    if (kind == "planar_support")
        return planar_support(obj);
    if (kind == "piecewise_arc")
        return piecewise_arc(obj);
    if (kind == "rounded_intersection")
        return make_rounded_intersection(number(obj, "R"), number(obj, "eps"));
    if (kind == "halfspace_polytope")
        return halfspace_polytope(obj);
    if (kind == "cube")
        return make_cube(dimension(obj));
    if (kind == "cross_polytope")
        return make_cross_polytope(dimension(obj));
    if (kind == "random_smooth")
        return random_smooth(obj);
    fail(ErrorCode::unsupported_kind, "unknown body kind '" + kind + "'");
}

}  // namespace

ConvexBody body_from_json(std::string const& text)
{
    json obj;
    try
    {
        obj = json::parse(text);
    }
    catch (json::exception const& e)
    {
        fail(ErrorCode::parse, std::string("invalid JSON: ") + e.what());
    }
    auto body = build(obj);
    if (obj.contains("label"))
    {
        if (!obj["label"].is_string())
            fail(ErrorCode::parse, "label must be a string");
        body = body.with_label(obj["label"].get<std::string>());
    }
    return body;
}

ConvexBody body_from_file(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::io, "cannot read body spec '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return body_from_json(ss.str());
}

}  // namespace lpasa
