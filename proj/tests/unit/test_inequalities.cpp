#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lpasa/inequalities.hpp"

using namespace lpasa;
using fixtures::throws_code;
using oracle::pi;
using oracle::rel;

namespace
{
constexpr double inf = std::numeric_limits<double>::infinity();

// the admissible part of the suite matrix, reused across bodies
struct Triple
{
    double r, s, t;
};
std::vector<Triple> const triples = {{1, 0, 2},    {0.5, -1, 3},  {2, -4, 1},
                                     {-6, 1, -4},  {-6, -4, -8},  {-6, -8, -4},
                                     {-8, -4, 1},  {2, 1, -4},    {0.5, 2, -1}};

std::vector<InequalityReport> all_checks(BodyContext& ctx, double c)
{
    std::vector<InequalityReport> out;
    for (auto [r, s, t] : triples)
        out.push_back(holder_triple_check(ctx, r, s, t));
    for (auto [r, t] : {std::pair{1.0, 2.0}, {0.5, 5.0}, {-1.0, -0.5}, {-8.0, -4.0}})
        out.push_back(monotonicity_check(ctx, r, t));
    for (double p : {0.0, 0.5, 1.0, 2.0, 5.0, inf, -0.5, -1.0, -1.5, -3.0, -8.0})
        out.push_back(isoperimetric_check(ctx, p, c));
    for (double p : {0.5, 1.0, 2.0, -0.5, -1.0, -3.0, -2.0})
        out.push_back(santalo_product_check(ctx, p));
    for (double p : {0.0, 1.0, 2.0, -1.0, -8.0})
        out.push_back(duality_check(ctx, p));
    out.push_back(volume_product_check(ctx));
    for (auto [p, s] : {std::pair{0.0, 2.0}, {1.0, -1.0}, {-6.0, 1.0}})
        for (auto& rep : minus_n_checks(ctx, s, p))
            out.push_back(rep);
    return out;
}

TEST(Inequalities, BallIsEqualityCaseEverywhere)
{
    BodyContext ctx(make_ball(2));
    for (auto const& rep : all_checks(ctx, 1.0))
        EXPECT_EQ(rep.verdict, Verdict::equality_case)
            << rep.name << " " << rep.params << " margin " << rep.margin;
}

TEST(Inequalities, BallWithSantaloConstantBelowOne)
{
    // c < 1 loosens the p < -n bound, so the ball holds strictly
    BodyContext ctx(make_ball(2));
    auto const rep = isoperimetric_check(ctx, -8, 0.25);
    EXPECT_EQ(rep.verdict, Verdict::holds);
    EXPECT_NEAR(rep.rhs, std::pow(0.25, 2.0 * -8 / (2 - 8)), 1e-14);
}

TEST(Inequalities, EllipsoidEqualityCases)
{
    for (auto [a, b] : {std::pair{2.0, 1.0}, {1.5, 0.8}})
    {
        BodyContext ctx(fixtures::ellipse(a, b));
        for (double p : {0.0, 0.5, 1.0, 2.0, 5.0, -0.5, -1.0, -1.5})
            EXPECT_EQ(isoperimetric_check(ctx, p, 0.25).verdict, Verdict::equality_case)
                << "p=" << p;
        for (double p : {0.5, 1.0, 2.0, -1.0, -3.0})
            EXPECT_EQ(santalo_product_check(ctx, p).verdict, Verdict::equality_case)
                << "p=" << p;
        for (double p : {0.0, 1.0, 2.0, 4.0, -1.0, -8.0})
            EXPECT_EQ(duality_check(ctx, p).verdict, Verdict::equality_case) << "p=" << p;
        EXPECT_EQ(volume_product_check(ctx).verdict, Verdict::equality_case);
        EXPECT_EQ(santalo_product_check(ctx, -2).verdict, Verdict::equality_case);
    }
}

TEST(Inequalities, EllipseDualityPairing)
{
    BodyContext ctx(fixtures::ellipse(2, 1));
    auto const rep = duality_check(ctx, -8);
    EXPECT_LT(rel(rep.lhs, oracle::asp_ellipse(2, 1, -8)), 1e-12);
    // polar ellipse has semi-axes 1/2 and 1
    EXPECT_LT(rel(rep.rhs, oracle::asp_ellipse(0.5, 1, -0.5)), 1e-12);
}

TEST(Inequalities, HolderAdmissibility)
{
    EXPECT_TRUE(holder_admissible(2, 1, 0, 2));
    EXPECT_FALSE(holder_admissible(2, 1, 2, 3));
    EXPECT_FALSE(holder_admissible(2, -2, 0, 1));
    EXPECT_FALSE(holder_admissible(2, 1, 1, 3));
    for (auto [r, s, t] : triples)
        EXPECT_TRUE(holder_admissible(2, r, s, t)) << r << "," << s << "," << t;
    BodyContext ctx(make_ball(2));
    EXPECT_TRUE(throws_code([&] { holder_triple_check(ctx, 1, 2, 3); },
                            ErrorCode::precondition));
}

TEST(Inequalities, MonotonicityRoleSwap)
{
    BodyContext ctx(fixtures::ellipse(2, 1));
    // both sides reduce to (ab)^{-2r/(n+r)}: ellipses saturate the bound
    auto const plain = monotonicity_check(ctx, 1, 2);
    EXPECT_EQ(plain.verdict, Verdict::equality_case);
    EXPECT_TRUE(plain.detail.empty());
    // (n+r)t/((n+t)r) = 1/3 for (-1, -0.5); the swapped pair qualifies
    auto const swapped = monotonicity_check(ctx, -1, -0.5);
    EXPECT_FALSE(swapped.detail.empty());
    EXPECT_EQ(swapped.params, "r=-0.5,t=-1");
    EXPECT_TRUE(throws_code([&] { monotonicity_check(ctx, 1, 1); }, ErrorCode::precondition));
}

TEST(Inequalities, MonotonicityOnEllipseUsesClosedForms)
{
    // as_p(E) = 2 pi (ab)^{(2-p)/(2+p)}, n|E| = 2 pi ab
    BodyContext ctx(fixtures::ellipse(2, 1));
    auto const rep = monotonicity_check(ctx, 1, 2);
    double const lhs = std::pow(2.0, 1.0 / 3) / 2;
    double const rhs = std::pow(1.0 / 2, 1 * (2 + 2) / (2.0 * (2 + 1)));
    EXPECT_LT(rel(rep.lhs, lhs), 1e-12);
    EXPECT_LT(rel(rep.rhs, rhs), 1e-12);
}

TEST(Inequalities, RandomBodyDeterminismAndConvexity)
{
    auto const a = random_smooth_body(42, 8, 0.2);
    auto const b = random_smooth_body(42, 8, 0.2);
    auto const c = random_smooth_body(43, 8, 0.2);
    for (int k = 0; k < 64; ++k)
    {
        auto const u = fixtures::dir(2 * pi * k / 64);
        EXPECT_EQ(support(a, u), support(b, u));
    }
    EXPECT_NE(support(a, fixtures::dir(0.3)), support(c, fixtures::dir(0.3)));
    for (std::uint64_t seed = 0; seed < 50; ++seed)
    {
        auto const body = random_smooth_body(seed, 8, 0.29);
        double min_f = inf;
        for (int k = 0; k < 2048; ++k)
            min_f = std::min(min_f, curvature_function(body, fixtures::dir(2 * pi * k / 2048)));
        EXPECT_GT(min_f, 0) << "seed " << seed;
        EXPECT_LT(centroid(body).norm(), 1e-10);
    }
}

TEST(Inequalities, RandomBodyZeroScaleIsDisc)
{
    auto const body = random_smooth_body(7, 8, 0);
    for (int k = 0; k < 32; ++k)
        EXPECT_NEAR(support(body, fixtures::dir(2 * pi * k / 32)), 1, 1e-14);
    EXPECT_TRUE(throws_code([] { random_smooth_body(1, 0, 0.1); }, ErrorCode::precondition));
    EXPECT_TRUE(throws_code([] { random_smooth_body(1, 8, 0.3); }, ErrorCode::precondition));
}

TEST(Inequalities, RandomBodiesHoldEverything)
{
    for (std::uint64_t seed = 100; seed < 106; ++seed)
    {
        BodyContext ctx(random_smooth_body(seed, 8, 0.2));
        for (auto const& rep : all_checks(ctx, 0.25))
            EXPECT_NE(rep.verdict, Verdict::violated)
                << rep.name << " " << rep.params << " margin " << rep.margin;
    }
}

TEST(Inequalities, SpecificRandomBodyCases)
{
    BodyContext ctx(random_smooth_body(5, 8, 0.25));
    EXPECT_EQ(holder_triple_check(ctx, 1, 0, 2).verdict, Verdict::holds);
    EXPECT_EQ(isoperimetric_check(ctx, -8, 0.25).verdict, Verdict::holds);
    EXPECT_EQ(santalo_product_check(ctx, -1).verdict, Verdict::holds);
    auto const dual = duality_check(ctx, 2);
    EXPECT_EQ(dual.verdict, Verdict::equality_case);
    auto const mn = minus_n_checks(ctx, 2, 0);
    ASSERT_EQ(mn.size(), 3u);
    EXPECT_EQ(mn[0].verdict, Verdict::holds);
    // p = 0 compares 2|K| with itself
    EXPECT_EQ(isoperimetric_check(ctx, 0, 0.25).verdict, Verdict::equality_case);
}

TEST(Inequalities, MinusNEllipse)
{
    BodyContext ctx(fixtures::ellipse(2, 1));
    auto const reps = minus_n_checks(ctx, 2, 0);
    ASSERT_EQ(reps.size(), 3u);
    EXPECT_EQ(reps[2].name, "minus_n_volume_ratio");
    EXPECT_NEAR(reps[2].rhs, 2, 1e-12);
    EXPECT_GE(reps[2].lhs, 2 * (1 - 1e-12));
    EXPECT_NE(reps[2].verdict, Verdict::violated);
}

TEST(Inequalities, AffineInvarianceOfIsoperimetricMargins)
{
    auto const base = fixtures::ellipse(1.5, 0.7);
    Mat t(2, 2);
    t << 2, 0, 0, 0.5;
    auto const img = linear_image(base, make_linear_map(t));
    BodyContext a(base);
    BodyContext b(img);
    for (double p : {0.5, 1.0, 2.0, -0.5, -1.0, -8.0})
        EXPECT_NEAR(isoperimetric_check(a, p, 0.25).margin,
                    isoperimetric_check(b, p, 0.25).margin, 1e-5)
            << "p=" << p;
}

TEST(Inequalities, PolytopesSkipDivergentExponents)
{
    BodyContext ctx(make_cube(2));
    auto const rep = isoperimetric_check(ctx, -1, 0.25);
    EXPECT_EQ(rep.verdict, Verdict::divergent_skip);
    EXPECT_EQ(isoperimetric_check(ctx, 1, 0.25).verdict, Verdict::holds);
    EXPECT_EQ(volume_product_check(ctx).verdict, Verdict::holds);
}

TEST(Inequalities, SantaloConstantRange)
{
    BodyContext ctx(make_ball(2));
    EXPECT_TRUE(throws_code([&] { isoperimetric_check(ctx, -8, 2); }, ErrorCode::config));
    EXPECT_TRUE(throws_code([&] { isoperimetric_check(ctx, -8, 0); }, ErrorCode::config));
    EXPECT_TRUE(throws_code([&] { isoperimetric_check(ctx, -2, 0.25); }, ErrorCode::exponent));
}

TEST(Inequalities, RoundedBodyBounds)
{
    auto const up = rounded_body_bounds(100, 0.01, 1);
    EXPECT_EQ(up.name, "rounded_upper");
    double const bound = 16 / std::cbrt(100.0) + 4 * pi * std::pow(0.01, 2.0 / 3);
    EXPECT_NEAR(up.rhs, bound, 1e-12);
    EXPECT_NEAR(up.rhs, 4.0304, 1e-4);
    EXPECT_EQ(up.verdict, Verdict::holds);

    auto const zero = rounded_body_bounds(100, 0.01, 0);
    EXPECT_NEAR(zero.rhs, 16 + 4 * pi * 0.01, 1e-12);
    EXPECT_EQ(zero.verdict, Verdict::holds);

    auto const low = rounded_body_bounds(100, 0.01, -1);
    EXPECT_EQ(low.name, "rounded_lower");
    EXPECT_NEAR(low.rhs, 100, 1e-10);
    EXPECT_EQ(low.verdict, Verdict::holds);

    auto const polar = rounded_body_bounds(100, 0.01, -4);
    EXPECT_EQ(polar.name, "rounded_polar");
    EXPECT_NEAR(polar.rhs, std::pow(100.0, 1.0) * std::pow(2.0, 0.0), 1e-10);
    EXPECT_EQ(polar.verdict, Verdict::holds);

    EXPECT_TRUE(throws_code([] { rounded_body_bounds(5, 0.01, 1); }, ErrorCode::precondition));
    EXPECT_TRUE(throws_code([] { rounded_body_bounds(100, 0.01, -2); }, ErrorCode::exponent));
}

TEST(Inequalities, QuantityPropagation)
{
    Quantity const a{2, 1e-6, false};
    Quantity const b{4, 2e-6, false};
    auto const p = a * b;
    EXPECT_EQ(p.value, 8);
    EXPECT_NEAR(p.rel_err, 3e-6, 1e-20);
    EXPECT_NEAR((a / b).rel_err, 3e-6, 1e-20);
    EXPECT_NEAR(pow(a, -3).rel_err, 3e-6, 1e-20);
    EXPECT_EQ(pow(a, -3).value, 0.125);
    EXPECT_TRUE((a * Quantity{inf, 0, true}).divergent);
    EXPECT_EQ(exact(3).rel_err, 0);
}

TEST(Inequalities, VerdictFollowsMargin)
{
    // margin and verdict are consistent across a mixed batch
    SuiteConfig cfg;
    cfg.ensemble.count = 2;
    for (auto const& rep : run_suite(cfg))
    {
        switch (rep.verdict)
        {
        case Verdict::equality_case:
            EXPECT_LE(std::abs(rep.margin), rep.tolerance);
            break;
        case Verdict::holds:
            EXPECT_GT(rep.margin, rep.tolerance);
            break;
        case Verdict::violated:
            EXPECT_LT(rep.margin, -rep.tolerance);
            break;
        case Verdict::divergent_skip:
            break;
        }
        EXPECT_GE(rep.tolerance, 1e-7);
    }
}

TEST(Inequalities, SuiteIsDeterministic)
{
    SuiteConfig cfg;
    cfg.ensemble.count = 3;
    auto const a = run_suite(cfg);
    auto const b = run_suite(cfg);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        EXPECT_EQ(a[i].name, b[i].name);
        EXPECT_EQ(a[i].body, b[i].body);
        // bitwise equality, NaN-safe
        EXPECT_EQ(std::memcmp(&a[i].lhs, &b[i].lhs, sizeof(double)), 0);
        EXPECT_EQ(std::memcmp(&a[i].margin, &b[i].margin, sizeof(double)), 0);
    }
    EXPECT_EQ(count_violations(a), 0u);
}

}  // namespace
