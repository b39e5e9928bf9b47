#include "inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>

#include "error.hpp"

namespace lpasa
{
namespace
{
constexpr double inf = std::numeric_limits<double>::infinity();

enum class Sense
{
    upper,     //!< lhs <= rhs
    lower,     //!< lhs >= rhs
    identity,  //!< lhs == rhs
};

std::string fmt(double x)
{
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", x);
    return buf;
}

InequalityReport make_report(std::string name, BodyContext const& ctx,
                             std::string params, Quantity const& lhs,
                             Quantity const& rhs, Sense sense)
{
    InequalityReport r;
    r.name = std::move(name);
    r.body = ctx.descriptor();
    r.params = std::move(params);
    r.grid = ctx.grid();
    r.lhs = lhs.value;
    r.rhs = rhs.value;
    r.tolerance = std::max(1e-7, 10 * (lhs.rel_err + rhs.rel_err));
    if (lhs.divergent || rhs.divergent || !std::isfinite(lhs.value)
        || !std::isfinite(rhs.value))
    {
        r.verdict = Verdict::divergent_skip;
        r.margin = std::numeric_limits<double>::quiet_NaN();
        return r;
    }
    switch (sense)
    {
        case Sense::upper: r.margin = (rhs.value - lhs.value) / std::abs(rhs.value); break;
        case Sense::lower: r.margin = (lhs.value - rhs.value) / std::abs(rhs.value); break;
        case Sense::identity:
            r.margin = lhs.value == rhs.value
                           ? 0.0
                           : -std::abs(lhs.value - rhs.value) / std::abs(lhs.value);
            break;
    }
    if (std::abs(r.margin) <= r.tolerance)
        r.verdict = Verdict::equality_case;
    else if (r.margin > 0)
        r.verdict = Verdict::holds;
    else
        r.verdict = Verdict::violated;
    return r;
}

double ball_volume(int n)
{
    return unit_ball_volume(n);
}

}  // namespace

char const* to_string(Verdict verdict)
{
    switch (verdict)
    {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::equality_case: return "equality-case";
        case Verdict::divergent_skip: return "divergent-skip";
    }
    return "?";
}

Quantity operator*(Quantity const& a, Quantity const& b)
{
    return {a.value * b.value, a.rel_err + b.rel_err, a.divergent || b.divergent};
}

Quantity operator/(Quantity const& a, Quantity const& b)
{
    return {a.value / b.value, a.rel_err + b.rel_err, a.divergent || b.divergent};
}

Quantity pow(Quantity const& a, double e)
{
    return {std::pow(a.value, e), std::abs(e) * a.rel_err, a.divergent};
}

Quantity exact(double value)
{
    return {value, 0, false};
}

//---------------------------------------------------------------------------//

BodyContext::BodyContext(ConvexBody body, std::string descriptor)
    : BodyContext(body, grid_for_body(body), std::move(descriptor))
{
}

BodyContext::BodyContext(ConvexBody body, SphereGrid grid,
                         std::string descriptor)
    : samples_(std::move(body), std::move(grid))
    , descriptor_(std::move(descriptor))
{
    if (descriptor_.empty())
        descriptor_ = samples_.body().label();
}

BodySamples& BodyContext::polar_samples()
{
    if (!polar_)
    {
        auto polar = polar_body(samples_.body());
        auto grid = grid_for_body(polar);
        polar_ = std::make_unique<BodySamples>(std::move(polar), std::move(grid));
    }
    return *polar_;
}

ConvexBody const& BodyContext::polar()
{
    return this->polar_samples().body();
}

double BodyContext::polar_error() const
{
    if (!polar_)
        return 0;
    auto const& p = polar_->body();
    double const h = p.fit_harmonics();
    return p.fit_residual() * (1 + h * h);
}

Quantity BodyContext::lookup(BodySamples const& samples,
                             std::map<double, Quantity>& cache, double p,
                             double extra_error)
{
    int const n = samples.body().dim();
    if (std::isinf(p))
        p = inf;
    if (auto it = cache.find(p); it != cache.end())
        return it->second;

    AsaValue v;
    if (p == -n)
        v = asa_minus_n(samples.body(), samples.grid());
    else if (std::isinf(p))
        v = samples.infinity();
    else
        v = samples.sphere_form(p);

    Quantity q;
    q.divergent = v.divergent;
    q.value = v.value;
    q.rel_err = (v.value > 0 ? v.error_estimate / v.value : 0) + extra_error;
    cache.emplace(p, q);
    return q;
}

Quantity BodyContext::as(double p)
{
    return this->lookup(samples_, cache_, p, 0);
}

Quantity BodyContext::polar_as(double p)
{
    auto& ps = this->polar_samples();
    return this->lookup(ps, polar_cache_, p, this->polar_error());
}

Quantity BodyContext::volume()
{
    return exact(lpasa::volume(samples_.body()));
}

Quantity BodyContext::polar_volume()
{
    auto const& p = this->polar();
    return {lpasa::volume(p), this->polar_error(), false};
}

//---------------------------------------------------------------------------//

ConvexBody random_smooth_body(std::uint64_t seed, int harmonic_budget,
                              double perturbation_scale)
{
    if (harmonic_budget < 1 || harmonic_budget > 256)
        fail(ErrorCode::precondition, "harmonic budget must be in [1, 256]");
    if (!(perturbation_scale >= 0) || !(perturbation_scale < 0.3))
        fail(ErrorCode::precondition, "perturbation scale must be in [0, 0.3)");

    double scale = perturbation_scale;
    for (int attempt = 0; attempt < 4; ++attempt)
    {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        std::vector<double> a(std::max(harmonic_budget, 1), 0.0);
        std::vector<double> b(a.size(), 0.0);
        for (int k = 2; k <= harmonic_budget; ++k)
        {
            double const bound = scale / (k * k * k);
            a[k - 1] = bound * unif(rng);
            b[k - 1] = bound * unif(rng);
        }
        try
        {
            auto body = make_planar_support(
                FourierSeries(1.0, std::move(a), std::move(b)),
                "random(seed=" + std::to_string(seed) + ")");
            return recentered(body);
        }
        catch (Error const& e)
        {
            if (e.code() != ErrorCode::geometry)
                throw;
            scale *= 0.5;
        }
    }
    fail(ErrorCode::geometry, "random body failed the convexity check");
}

bool holder_admissible(int dim, double r, double s, double t)
{
    double const n = dim;
    if (r == -n || s == -n || t == -n || r == s || t == s)
        return false;
    return (n + r) * (t - s) / ((n + t) * (r - s)) > 1;
}

InequalityReport
holder_triple_check(BodyContext& ctx, double r, double s, double t)
{
    double const n = ctx.dim();
    if (!holder_admissible(ctx.dim(), r, s, t))
        fail(ErrorCode::precondition,
             "triple (r, s, t) = (" + fmt(r) + ", " + fmt(s) + ", " + fmt(t)
                 + ") violates (n+r)(t-s)/((n+t)(r-s)) > 1");
    double const alpha = (r - s) * (n + t) / ((t - s) * (n + r));
    double const beta = (t - r) * (n + s) / ((t - s) * (n + r));
    auto const rhs = pow(ctx.as(t), alpha) * pow(ctx.as(s), beta);
    return make_report("holder_triple", ctx,
                       "r=" + fmt(r) + ",s=" + fmt(s) + ",t=" + fmt(t),
                       ctx.as(r), rhs, Sense::upper);
}

InequalityReport monotonicity_check(BodyContext& ctx, double r, double t)
{
    double const n = ctx.dim();
    auto admissible = [n](double a, double b) {
        return a != 0 && b != 0 && a != -n && b != -n
               && (n + a) * b / ((n + b) * a) > 1;
    };
    std::string detail;
    if (!admissible(r, t))
    {
        if (!admissible(t, r))
            fail(ErrorCode::precondition,
                 "pair (r, t) = (" + fmt(r) + ", " + fmt(t)
                     + ") violates (n+r)t/((n+t)r) > 1 in either order");
        std::swap(r, t);
        detail = "roles of r and t swapped to satisfy the condition";
    }
    auto const nk = exact(n) * ctx.volume();
    auto const lhs = ctx.as(r) / nk;
    auto const rhs = pow(ctx.as(t) / nk, r * (n + t) / (t * (n + r)));
    auto rep = make_report("monotonicity", ctx, "r=" + fmt(r) + ",t=" + fmt(t),
                           lhs, rhs, Sense::upper);
    rep.detail = detail;
    return rep;
}

InequalityReport
isoperimetric_check(BodyContext& ctx, double p, double santalo_c)
{
    int const dim = ctx.dim();
    double const n = dim;
    check_exponent(p, dim);
    if (!(santalo_c > 0) || !(santalo_c <= 1))
        fail(ErrorCode::config, "Santalo constant must lie in (0, 1]");
    auto const ball = ball_volume(dim);
    auto const lhs = ctx.as(p) / exact(n * ball);
    double const e = std::isinf(p) ? -1.0 : (n - p) / (n + p);
    auto rhs = pow(ctx.volume() / exact(ball), e);
    std::string name = "isoperimetric_upper";
    Sense sense = Sense::upper;
    if (p < 0 && p > -n)
    {
        name = "isoperimetric_lower";
        sense = Sense::lower;
    }
    else if (p < -n)
    {
        name = "isoperimetric_inverse";
        sense = Sense::lower;
        double const ce = std::isinf(p) ? n : n * p / (n + p);
        rhs = exact(std::pow(santalo_c, ce)) * rhs;
    }
    std::string params = "p=" + fmt(p);
    if (p < -n)
        params += ",c=" + fmt(santalo_c);
    return make_report(name, ctx, params, lhs, rhs, sense);
}

InequalityReport santalo_product_check(BodyContext& ctx, double p)
{
    int const dim = ctx.dim();
    double const n = dim;
    if (p == -n)
    {
        auto const lhs = ctx.as(p) * ctx.polar_as(p);
        return make_report("minus_n_product", ctx, "p=" + fmt(p), lhs,
                           exact(1.0), Sense::lower);
    }
    check_exponent(p, dim);
    auto const lhs = ctx.as(p) * ctx.polar_as(p);
    auto const rhs = exact(n * n) * ctx.volume() * ctx.polar_volume();
    return make_report("santalo_product", ctx, "p=" + fmt(p), lhs, rhs,
                       p >= 0 ? Sense::upper : Sense::lower);
}

InequalityReport duality_check(BodyContext& ctx, double p)
{
    int const dim = ctx.dim();
    double const n = dim;
    check_exponent(p, dim);
    double q;
    if (p == 0)
        q = inf;
    else if (std::isinf(p))
        q = 0;
    else
        q = n * n / p;
    auto rep = make_report("duality", ctx, "p=" + fmt(p) + ",q=" + fmt(q),
                           ctx.as(p), ctx.polar_as(q), Sense::identity);
    auto const& polar = ctx.polar();
    if (polar.fit_residual() > 0)
        rep.detail = "polar " + polar.method() + " residual "
                     + fmt(polar.fit_residual());
    return rep;
}

InequalityReport volume_product_check(BodyContext& ctx)
{
    double const b = ball_volume(ctx.dim());
    return make_report("volume_product", ctx, "", ctx.volume() * ctx.polar_volume(),
                       exact(b * b), Sense::upper);
}

InequalityReport rounded_body_bounds(double big_radius, double eps, double p)
{
    if (!(big_radius >= 10) || !(eps > 0) || !(eps <= 0.1))
        fail(ErrorCode::precondition, "rounded body bounds need R >= 10, 0 < eps <= 0.1");
    check_exponent(p, 2);
    if (std::isinf(p))
        fail(ErrorCode::exponent, "rounded body bounds need a finite exponent");
    double const r = big_radius;
    BodyContext ctx(make_rounded_intersection(r, eps));
    if (p >= 0)
    {
        double const bound = 16 / std::pow(r, p / (2 + p))
                             + 4 * std::numbers::pi * std::pow(eps, 2 / (2 + p));
        return make_report("rounded_upper", ctx, "p=" + fmt(p), ctx.as(p),
                           exact(bound), Sense::upper);
    }
    if (p > -2)
    {
        double const bound = std::pow(2.0, 3 * (p + 1) / (2 + p))
                             * std::pow(r, -p / (2 + p));
        return make_report("rounded_lower", ctx, "p=" + fmt(p), ctx.as(p),
                           exact(bound), Sense::lower);
    }
    double const bound = std::pow(r, -2 / (p + 2))
                         * std::pow(2.0, (12 + 3 * p) / (4 + 2 * p));
    auto rep = make_report("rounded_polar", ctx, "p=" + fmt(p),
                           ctx.as(4 / p), exact(bound), Sense::lower);
    rep.detail = "polar value evaluated as as_{4/p}(K)";
    return rep;
}

std::vector<InequalityReport>
minus_n_checks(BodyContext& ctx, double s, double p)
{
    int const dim = ctx.dim();
    double const n = dim;
    check_exponent(p, dim);
    check_exponent(s, dim);
    std::vector<InequalityReport> out;

    double const sign = n * (s - p) / ((n + p) * (n + s));
    double const e = 2 * sign;
    auto const rhs = pow(ctx.as(-n), e) * ctx.as(s);
    Sense const sense = sign > 0 ? Sense::upper
                        : sign < 0 ? Sense::lower
                                   : Sense::identity;
    out.push_back(make_report("minus_n_bound", ctx,
                              "p=" + fmt(p) + ",s=" + fmt(s), ctx.as(p), rhs,
                              sense));

    double const ball = ball_volume(dim);
    out.push_back(make_report("minus_n_isoperimetric", ctx, "",
                              ctx.as(-n), ctx.volume() / exact(ball),
                              Sense::lower));
    out.push_back(make_report("minus_n_volume_ratio", ctx, "", ctx.as(-n),
                              pow(ctx.volume() / ctx.polar_volume(), 0.5),
                              Sense::lower));
    return out;
}

//---------------------------------------------------------------------------//

namespace
{
struct Triple
{
    double r, s, t;
};

constexpr Triple holder_triples[] = {
    {1, 0, 2},    {0.5, -1, 3}, {2, -4, 1},   {-6, 1, -4}, {-6, -4, -8},
    {-6, -8, -4}, {-8, -4, 1},  {2, 1, -4},   {0.5, 2, -1},
};

constexpr std::pair<double, double> monotone_pairs[]
    = {{1, 2}, {0.5, 5}, {-1, -0.5}, {-8, -4}, {-4, -8}};

constexpr double iso_exponents[]
    = {0, 0.5, 1, 2, 5, inf, -0.5, -1, -1.5, -3, -4, -6, -8};

constexpr double product_exponents[]
    = {0.5, 1, 2, 5, -0.5, -1, -1.5, -3, -4, -6, -2};

constexpr double duality_exponents[] = {0, 1, 2, 4, -1, -8};

constexpr std::pair<double, double> minus_n_pairs[]
    = {{0, 2}, {1, -1}, {2, -6}, {-6, 1}, {-1, -4}};

void run_checks(BodyContext& ctx, SuiteConfig const& config,
                std::vector<InequalityReport>& out)
{
    for (auto const& tr : holder_triples)
        out.push_back(holder_triple_check(ctx, tr.r, tr.s, tr.t));
    for (auto const& [r, t] : monotone_pairs)
        out.push_back(monotonicity_check(ctx, r, t));
    for (double p : iso_exponents)
        out.push_back(isoperimetric_check(ctx, p, config.santalo_c));
    for (double p : product_exponents)
        out.push_back(santalo_product_check(ctx, p));
    if (config.include_duality)
    {
        for (double p : duality_exponents)
            out.push_back(duality_check(ctx, p));
    }
    for (auto const& [p, s] : minus_n_pairs)
    {
        auto reps = minus_n_checks(ctx, s, p);
        // the as_{-n} lower bounds do not depend on (p, s); keep them once
        if (&p != &minus_n_pairs[0].first)
            reps.resize(1);
        out.insert(out.end(), reps.begin(), reps.end());
    }
    out.push_back(volume_product_check(ctx));
}

}  // namespace

std::vector<InequalityReport> run_suite(SuiteConfig const& config)
{
    std::vector<InequalityReport> out;
    Mat rot(2, 2);
    double const a = 0.3;
    rot << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
    std::vector<std::pair<ConvexBody, std::string>> fixed = {
        {make_ball(2), "ball(2)"},
        {make_ellipsoid({2, 1}), "ellipsoid(2,1)"},
        {make_ellipsoid({1.5, 0.8}, rot), "ellipsoid(1.5,0.8,rot=0.3)"},
    };
    for (auto& [body, name] : fixed)
    {
        BodyContext ctx(body, name);
        run_checks(ctx, config, out);
    }
    auto const& ens = config.ensemble;
    for (int i = 0; i < ens.count; ++i)
    {
        std::uint64_t const seed = ens.seed + static_cast<std::uint64_t>(i);
        auto body = random_smooth_body(seed, ens.harmonic_budget,
                                       ens.perturbation_scale);
        BodyContext ctx(body, "random(seed=" + std::to_string(seed) + ")");
        run_checks(ctx, config, out);
    }
    return out;
}

std::size_t count_violations(std::vector<InequalityReport> const& reports)
{
    return static_cast<std::size_t>(
        std::count_if(reports.begin(), reports.end(), [](auto const& r) {
            return r.verdict == Verdict::violated;
        }));
}

}  // namespace lpasa
