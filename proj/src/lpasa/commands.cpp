#include "commands.hpp"

#include <cmath>
#include <limits>

#include "asa.hpp"
#include "error.hpp"
#include "extrapolation.hpp"
#include "floating.hpp"

namespace lpasa
{
namespace
{
constexpr double nan = std::numeric_limits<double>::quiet_NaN();

double or_nan(std::optional<double> const& x)
{
    return x ? *x : nan;
}

std::vector<std::string> const report_columns = {
    "body", "check", "params", "lhs", "rhs", "margin",
    "tolerance", "verdict", "grid", "detail"};

//! Report cells in report_columns order, counting the verdict into \p t.
std::vector<Cell> report_row(Table& t, InequalityReport const& r)
{
    if (r.verdict == Verdict::violated)
        ++t.violations;
    if (r.verdict == Verdict::divergent_skip)
        ++t.divergences;
    return {r.body, r.name, r.params, r.lhs, r.rhs, r.margin, r.tolerance,
            std::string(to_string(r.verdict)), r.grid, r.detail};
}

void require_planar(ConvexBody const& body, char const* what)
{
    if (body.dim() != 2)
        fail(ErrorCode::unsupported_kind,
             std::string(what) + " is implemented for planar bodies only");
}

void add_limit_rows(Table& t, LimitEstimate const& est,
                    std::vector<Cell> const& prefix)
{
    for (auto const& s : est.samples)
    {
        std::vector<Cell> row = prefix;
        std::vector<Cell> rest = {
            s.parameter, s.deficit, s.ratio, est.extrapolated,
            est.fitted_exponent, est.rate, or_nan(est.target),
            or_nan(est.target_error), or_nan(est.relative_gap),
            or_nan(est.cross_target), or_nan(est.cross_gap),
            std::int64_t(est.divergent), est.note, est.grid,
            std::int64_t(est.direction_count)};
        row.insert(row.end(), rest.begin(), rest.end());
        t.add_row(std::move(row));
    }
}

std::vector<std::string> const limit_columns = {
    "parameter", "deficit", "ratio", "extrapolated", "fitted_exponent",
    "rate", "target", "target_error", "relative_gap", "cross_target",
    "cross_gap", "divergent", "note", "grid", "direction_count"};

}  // namespace

SphereGrid resolve_grid(ConvexBody const& body, std::string const& spec,
                        std::uint64_t seed)
{
    if (spec.empty() || spec == "default")
        return grid_for_body(body, seed);
    if (spec.rfind("piecewise:", 0) == 0 && body.kind() == BodyKind::piecewise_arc)
    {
        auto const order = parse_grid(spec, body.dim(), seed).resolution();
        return grid_circle_piecewise(planar_breakpoints(body), order);
    }
    return parse_grid(spec, body.dim(), seed);
}

Table asp_table(ConvexBody const& body, std::vector<double> const& ps,
                SphereGrid const& grid)
{
    int const n = body.dim();
    for (double p : ps)
    {
        check_exponent(p, n);
        if (p == -n)
            fail(ErrorCode::exponent, "p = -n is not part of an exponent list");
    }
    Table t;
    t.columns = {"body", "p", "value", "error_estimate", "method", "divergent",
                 "grid", "boundary_value", "boundary_error", "agreement",
                 "caveat"};
    BodySamples samples(body, grid);
    for (double p : ps)
    {
        auto const v = std::isinf(p) ? samples.infinity() : samples.sphere_form(p);
        double bval = nan;
        double berr = nan;
        double agree = nan;
        if (body.is_smooth())
        {
            auto const b = asa_boundary_form(body, p, grid);
            bval = b.value;
            berr = b.error_estimate;
            agree = std::abs(v.value - b.value) / std::abs(v.value);
        }
        if (v.divergent)
            ++t.divergences;
        t.add_row({body.label(), p, v.value, v.error_estimate,
                   std::string(to_string(v.method)), std::int64_t(v.divergent),
                   v.grid.empty() ? grid.describe() : v.grid, bval, berr,
                   agree, v.caveat});
    }
    return t;
}

Table duality_table(ConvexBody const& body, std::vector<double> const& ps,
                    SphereGrid const& grid)
{
    if (!body.is_smooth())
        fail(ErrorCode::unsupported_kind, "duality needs a smooth body");
    BodyContext ctx(body, grid, body.label());
    Table t;
    t.columns = report_columns;
    t.columns.insert(t.columns.end(), {"polar_method", "polar_fit_residual"});
    for (double p : ps)
    {
        auto row = report_row(t, duality_check(ctx, p));
        row.push_back(ctx.polar().method());
        row.push_back(ctx.polar().fit_residual());
        t.add_row(std::move(row));
    }
    return t;
}

Table floating_table(ConvexBody const& body, std::vector<double> const& schedule,
                     int direction_count, SphereGrid const& grid)
{
    require_planar(body, "the floating body");
    auto const est = floating_limit(body, schedule, direction_count, grid);
    Table t;
    t.columns = {"body"};
    t.columns.insert(t.columns.end(), limit_columns.begin(), limit_columns.end());
    add_limit_rows(t, est, {body.label()});
    return t;
}

Table surface_table(ConvexBody const& body, std::vector<double> const& ps,
                    std::vector<double> const& schedule, int direction_count,
                    SphereGrid const& grid)
{
    require_planar(body, "the surface body");
    Table t;
    t.columns = {"body", "weight", "p", "asp"};
    t.columns.insert(t.columns.end(), limit_columns.begin(), limit_columns.end());
    if (ps.empty())
    {
        auto const w = weight_constant(1.0);
        auto const est = surface_limit(body, w, schedule, direction_count, grid);
        add_limit_rows(t, est, {body.label(), w.label, nan, nan});
        return t;
    }
    for (double p : ps)
    {
        check_exponent(p, 2);
        if (std::isinf(p))
            fail(ErrorCode::exponent, "the f_p weight needs a finite exponent");
        auto const w = weight_fp(body, p);
        auto const est = surface_limit(body, w, schedule, direction_count, grid);
        auto const ref = asa(body, p, grid);
        add_limit_rows(t, est, {body.label(), w.label, p, ref.value});
    }
    return t;
}

Table suite_table(SuiteConfig const& config)
{
    Table t;
    t.columns = report_columns;
    for (auto const& r : run_suite(config))
        t.add_row(report_row(t, r));
    return t;
}

Table cube_table(int dim, std::vector<double> const& deltas)
{
    std::vector<CubeExample> rows;
    std::vector<double> x, y;
    for (double d : deltas)
    {
        rows.push_back(cube_counterexample(dim, d));
        x.push_back(d);
        y.push_back(rows.back().ratio);
    }
    double const slope = x.size() >= 2 ? loglog_slope(x, y) : nan;
    Table t;
    t.columns = {"dim", "delta", "polar_volume", "deficit_bound", "ratio",
                 "loglog_slope", "predicted_slope"};
    double const predicted = 1.0 / dim - 2.0 / (dim + 1);
    for (auto const& r : rows)
        t.add_row({std::int64_t(dim), r.delta, r.polar_volume, r.deficit_bound,
                   r.ratio, slope, predicted});
    return t;
}

Table rounded_table(double big_radius, double eps, std::vector<double> const& ps)
{
    Table t;
    t.columns = {"R", "eps", "p"};
    t.columns.insert(t.columns.end(), report_columns.begin(), report_columns.end());
    for (double p : ps)
    {
        std::vector<Cell> row = {big_radius, eps, p};
        auto rest = report_row(t, rounded_body_bounds(big_radius, eps, p));
        row.insert(row.end(), rest.begin(), rest.end());
        t.add_row(std::move(row));
    }
    return t;
}

}  // namespace lpasa
