#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>

#include <gtest/gtest.h>

#include "lpasa/lpasa.h"

namespace
{
constexpr double pi = 3.14159265358979323846;

std::string data(char const* name)
{
    return std::string(LPASA_DATA_DIR) + "/bodies/" + name;
}

struct BodyGuard
{
    lpasa_body* ptr = nullptr;
    ~BodyGuard() { lpasa_body_free(ptr); }
};

struct TableGuard
{
    lpasa_table* ptr = nullptr;
    ~TableGuard() { lpasa_table_free(ptr); }
};

TEST(CApi, VersionAndStatusStrings)
{
    EXPECT_NE(std::string(lpasa_version()), "");
    EXPECT_EQ(std::string(lpasa_status_string(LPASA_OK)), "ok");
    for (int s = LPASA_ERR_NULL_ARGUMENT; s <= LPASA_ERR_INTERNAL; ++s)
        EXPECT_NE(std::string(lpasa_status_string(static_cast<lpasa_status>(s))), "");
    EXPECT_NE(std::string(lpasa_status_string(static_cast<lpasa_status>(999))), "");
}

TEST(CApi, NullArguments)
{
    BodyGuard b;
    EXPECT_EQ(lpasa_body_from_json(nullptr, &b.ptr), LPASA_ERR_NULL_ARGUMENT);
    EXPECT_EQ(lpasa_body_from_json("{}", nullptr), LPASA_ERR_NULL_ARGUMENT);
    lpasa_value v;
    EXPECT_EQ(lpasa_asa(nullptr, 1, nullptr, &v), LPASA_ERR_NULL_ARGUMENT);
    int dim = 0;
    EXPECT_EQ(lpasa_body_dim(nullptr, &dim), LPASA_ERR_NULL_ARGUMENT);
    EXPECT_EQ(lpasa_run_suite(nullptr, nullptr), LPASA_ERR_NULL_ARGUMENT);
    EXPECT_NE(std::string(lpasa_last_error()), "");
    // freeing null is a no-op
    lpasa_body_free(nullptr);
    lpasa_table_free(nullptr);
}

TEST(CApi, ErrorCodesAndMessages)
{
    BodyGuard b;
    EXPECT_EQ(lpasa_body_from_json("{", &b.ptr), LPASA_ERR_PARSE);
    EXPECT_EQ(b.ptr, nullptr);
    EXPECT_NE(std::string(lpasa_last_error()).find("JSON"), std::string::npos);
    EXPECT_EQ(lpasa_body_from_json(R"({"kind": "torus"})", &b.ptr),
              LPASA_ERR_UNSUPPORTED_KIND);
    EXPECT_NE(std::string(lpasa_last_error()).find("torus"), std::string::npos);
    EXPECT_EQ(lpasa_body_from_file("/nonexistent.json", &b.ptr), LPASA_ERR_IO);
    EXPECT_EQ(lpasa_body_from_json(R"({"kind": "ellipsoid", "semi_axes": [1, 0]})",
                                   &b.ptr),
              LPASA_ERR_PRECONDITION);

    ASSERT_EQ(lpasa_body_from_json(R"({"kind": "ball"})", &b.ptr), LPASA_OK);
    lpasa_value v;
    EXPECT_EQ(lpasa_asa_boundary_form(b.ptr, -2, nullptr, &v), LPASA_ERR_EXPONENT);
    EXPECT_EQ(lpasa_asa(b.ptr, 1, "circle:-4", &v), LPASA_ERR_CONFIG);
}

TEST(CApi, LastErrorIsPerThread)
{
    BodyGuard b;
    EXPECT_EQ(lpasa_body_from_json(R"({"kind": "torus"})", &b.ptr),
              LPASA_ERR_UNSUPPORTED_KIND);
    std::string other;
    std::thread([&] {
        BodyGuard c;
        lpasa_body_from_json("{", &c.ptr);
        other = lpasa_last_error();
    }).join();
    EXPECT_NE(std::string(lpasa_last_error()).find("torus"), std::string::npos);
    EXPECT_NE(other.find("JSON"), std::string::npos);
}

TEST(CApi, BodyQueries)
{
    BodyGuard b;
    ASSERT_EQ(lpasa_body_from_file(data("ellipse_2_1.json").c_str(), &b.ptr), LPASA_OK);
    int dim = 0;
    int smooth = 0;
    double vol = 0;
    char const* label = nullptr;
    EXPECT_EQ(lpasa_body_dim(b.ptr, &dim), LPASA_OK);
    EXPECT_EQ(dim, 2);
    EXPECT_EQ(lpasa_body_is_smooth(b.ptr, &smooth), LPASA_OK);
    EXPECT_EQ(smooth, 1);
    EXPECT_EQ(lpasa_body_volume(b.ptr, &vol), LPASA_OK);
    EXPECT_NEAR(vol, 2 * pi, 1e-13);
    EXPECT_EQ(lpasa_body_label(b.ptr, &label), LPASA_OK);
    EXPECT_NE(std::string(label), "");
    double const u[2] = {3, 0};
    double h = 0;
    EXPECT_EQ(lpasa_body_support(b.ptr, u, &h), LPASA_OK);
    EXPECT_NEAR(h, 2, 1e-15);
    double const zero[2] = {0, 0};
    EXPECT_EQ(lpasa_body_support(b.ptr, zero, &h), LPASA_ERR_PRECONDITION);

    BodyGuard polar;
    ASSERT_EQ(lpasa_body_polar(b.ptr, &polar.ptr), LPASA_OK);
    EXPECT_EQ(lpasa_body_support(polar.ptr, u, &h), LPASA_OK);
    EXPECT_NEAR(h, 0.5, 1e-15);
}

TEST(CApi, Functionals)
{
    BodyGuard b;
    ASSERT_EQ(lpasa_body_from_json(R"({"kind": "ellipsoid", "semi_axes": [2, 1]})", &b.ptr),
              LPASA_OK);
    lpasa_value v;
    ASSERT_EQ(lpasa_asa(b.ptr, 1, "circle:4096", &v), LPASA_OK);
    EXPECT_NEAR(v.value, 2 * pi * std::cbrt(2.0), 1e-12);
    EXPECT_EQ(v.method, LPASA_METHOD_SPHERE_FORM);
    EXPECT_EQ(v.divergent, 0);
    ASSERT_EQ(lpasa_asa(b.ptr, -2, nullptr, &v), LPASA_OK);
    EXPECT_EQ(v.method, LPASA_METHOD_SUP_FORM);
    EXPECT_NEAR(v.value, 2, 1e-12);
    ASSERT_EQ(lpasa_asa(b.ptr, INFINITY, "default", &v), LPASA_OK);
    EXPECT_NEAR(v.value, pi, 1e-12);
    ASSERT_EQ(lpasa_asa_boundary_form(b.ptr, 1, nullptr, &v), LPASA_OK);
    EXPECT_EQ(v.method, LPASA_METHOD_BOUNDARY_FORM);
    EXPECT_NEAR(v.value, 2 * pi * std::cbrt(2.0), 1e-10);

    BodyGuard sq;
    ASSERT_EQ(lpasa_body_from_json(R"({"kind": "cube", "dim": 2})", &sq.ptr), LPASA_OK);
    ASSERT_EQ(lpasa_asa(sq.ptr, -1, nullptr, &v), LPASA_OK);
    EXPECT_EQ(v.divergent, 1);
    EXPECT_TRUE(std::isinf(v.value));
}

TEST(CApi, AspTable)
{
    BodyGuard b;
    ASSERT_EQ(lpasa_body_from_file(data("disc.json").c_str(), &b.ptr), LPASA_OK);
    double const ps[3] = {0, 1, INFINITY};
    TableGuard t;
    ASSERT_EQ(lpasa_run_asp(b.ptr, ps, 3, nullptr, &t.ptr), LPASA_OK);
    size_t rows = 0;
    size_t cols = 0;
    ASSERT_EQ(lpasa_table_shape(t.ptr, &rows, &cols), LPASA_OK);
    EXPECT_EQ(rows, 3u);
    char const* name = nullptr;
    ASSERT_EQ(lpasa_table_column_name(t.ptr, 0, &name), LPASA_OK);
    EXPECT_EQ(std::string(name), "body");
    EXPECT_EQ(lpasa_table_column_name(t.ptr, cols, &name), LPASA_ERR_OUT_OF_RANGE);
    for (size_t r = 0; r < rows; ++r)
    {
        double value = 0;
        ASSERT_EQ(lpasa_table_number(t.ptr, r, "value", &value), LPASA_OK);
        EXPECT_NEAR(value, 2 * pi, 1e-12);
    }
    char const* text = nullptr;
    ASSERT_EQ(lpasa_table_text(t.ptr, 2, "p", &text), LPASA_OK);
    EXPECT_EQ(std::string(text), "inf");
    double x = 0;
    EXPECT_EQ(lpasa_table_number(t.ptr, 0, "method", &x), LPASA_ERR_CONFIG);
    EXPECT_EQ(lpasa_table_number(t.ptr, 0, "nope", &x), LPASA_ERR_OUT_OF_RANGE);
    EXPECT_EQ(lpasa_table_number(t.ptr, 9, "value", &x), LPASA_ERR_OUT_OF_RANGE);
    size_t violations = 7;
    size_t divergences = 7;
    ASSERT_EQ(lpasa_table_counts(t.ptr, &violations, &divergences), LPASA_OK);
    EXPECT_EQ(violations, 0u);
    EXPECT_EQ(divergences, 0u);

    double const bad[1] = {-2};
    TableGuard t2;
    EXPECT_EQ(lpasa_run_asp(b.ptr, bad, 1, nullptr, &t2.ptr), LPASA_ERR_EXPONENT);
    EXPECT_EQ(t2.ptr, nullptr);
}

TEST(CApi, SerializeAndWrite)
{
    BodyGuard b;
    ASSERT_EQ(lpasa_body_from_json(R"({"kind": "ball"})", &b.ptr), LPASA_OK);
    double const ps[2] = {1, 2};
    TableGuard t;
    ASSERT_EQ(lpasa_run_asp(b.ptr, ps, 2, "circle:64", &t.ptr), LPASA_OK);
    char const* csv = nullptr;
    char const* again = nullptr;
    ASSERT_EQ(lpasa_table_serialize(t.ptr, LPASA_FORMAT_CSV, &csv), LPASA_OK);
    ASSERT_EQ(lpasa_table_serialize(t.ptr, LPASA_FORMAT_CSV, &again), LPASA_OK);
    // earlier strings stay valid while the table lives
    EXPECT_EQ(std::string(csv), std::string(again));
    EXPECT_EQ(std::string(csv).rfind("body,p,value", 0), 0u);
    char const* json = nullptr;
    ASSERT_EQ(lpasa_table_serialize(t.ptr, LPASA_FORMAT_JSON, &json), LPASA_OK);
    EXPECT_EQ(json[0], '[');

    auto const path = testing::TempDir() + "/capi_table.csv";
    ASSERT_EQ(lpasa_table_write(t.ptr, LPASA_FORMAT_CSV, path.c_str()), LPASA_OK);
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), std::string(csv));
    std::remove(path.c_str());
    EXPECT_EQ(lpasa_table_write(t.ptr, LPASA_FORMAT_CSV, "/nonexistent/dir/x.csv"),
              LPASA_ERR_IO);
    EXPECT_EQ(lpasa_table_serialize(t.ptr, static_cast<lpasa_format>(5), &csv),
              LPASA_ERR_CONFIG);
}

TEST(CApi, SuiteConfigAndDeterminism)
{
    lpasa_suite_config cfg;
    lpasa_suite_config_default(&cfg);
    EXPECT_EQ(cfg.count, 100);
    EXPECT_DOUBLE_EQ(cfg.santalo_c, 0.25);
    cfg.count = 2;
    TableGuard a;
    TableGuard b;
    ASSERT_EQ(lpasa_run_suite(&cfg, &a.ptr), LPASA_OK);
    ASSERT_EQ(lpasa_run_suite(&cfg, &b.ptr), LPASA_OK);
    char const* sa = nullptr;
    char const* sb = nullptr;
    lpasa_table_serialize(a.ptr, LPASA_FORMAT_CSV, &sa);
    lpasa_table_serialize(b.ptr, LPASA_FORMAT_CSV, &sb);
    EXPECT_EQ(std::string(sa), std::string(sb));
    size_t violations = 1;
    size_t divergences = 1;
    lpasa_table_counts(a.ptr, &violations, &divergences);
    EXPECT_EQ(violations, 0u);

    cfg.santalo_c = 2;
    TableGuard c;
    EXPECT_EQ(lpasa_run_suite(&cfg, &c.ptr), LPASA_ERR_CONFIG);
    cfg.santalo_c = 0.25;
    cfg.count = -1;
    EXPECT_NE(lpasa_run_suite(&cfg, &c.ptr), LPASA_OK);
}

TEST(CApi, ExampleCommands)
{
    double const deltas[3] = {1e-2, 1e-3, 1e-4};
    TableGuard cube;
    ASSERT_EQ(lpasa_run_cube_example(2, deltas, 3, &cube.ptr), LPASA_OK);
    double slope = 0;
    ASSERT_EQ(lpasa_table_number(cube.ptr, 0, "predicted_slope", &slope), LPASA_OK);
    EXPECT_NEAR(slope, -1.0 / 6, 1e-15);

    double const ps[2] = {1, -1};
    TableGuard rounded;
    ASSERT_EQ(lpasa_run_rounded_example(100, 0.01, ps, 2, &rounded.ptr), LPASA_OK);
    char const* verdict = nullptr;
    ASSERT_EQ(lpasa_table_text(rounded.ptr, 0, "verdict", &verdict), LPASA_OK);
    EXPECT_EQ(std::string(verdict), "holds");
}

TEST(CApi, FloatingAndSurfaceCommands)
{
    BodyGuard b;
    ASSERT_EQ(lpasa_body_from_json(R"({"kind": "ball"})", &b.ptr), LPASA_OK);
    double const sched[4] = {1e-2, 2.5e-3, 6.25e-4, 1.5625e-4};
    TableGuard fl;
    ASSERT_EQ(lpasa_run_floating(b.ptr, sched, 4, 256, "circle:256", &fl.ptr), LPASA_OK);
    size_t rows = 0;
    size_t cols = 0;
    lpasa_table_shape(fl.ptr, &rows, &cols);
    EXPECT_EQ(rows, 4u);
    double target = 0;
    ASSERT_EQ(lpasa_table_number(fl.ptr, 0, "target", &target), LPASA_OK);
    EXPECT_NEAR(target, 2 * pi, 1e-10);

    double const ss[4] = {0.4, 0.2, 0.1, 0.05};
    TableGuard sf;
    ASSERT_EQ(lpasa_run_surface(b.ptr, nullptr, 0, ss, 4, 256, nullptr, &sf.ptr), LPASA_OK);
    TableGuard bad;
    EXPECT_EQ(lpasa_run_floating(b.ptr, sched, 4, 8, nullptr, &bad.ptr), LPASA_ERR_CONFIG);

    BodyGuard ball3;
    ASSERT_EQ(lpasa_body_from_json(R"({"kind": "ball", "dim": 3})", &ball3.ptr), LPASA_OK);
    EXPECT_EQ(lpasa_run_floating(ball3.ptr, sched, 4, 256, nullptr, &bad.ptr),
              LPASA_ERR_UNSUPPORTED_KIND);
}

TEST(CApi, DualityTable)
{
    BodyGuard b;
    ASSERT_EQ(lpasa_body_from_file(data("ellipse_1.5_1.json").c_str(), &b.ptr), LPASA_OK);
    double const ps[3] = {1, 2, 4};
    TableGuard t;
    ASSERT_EQ(lpasa_run_duality(b.ptr, ps, 3, nullptr, &t.ptr), LPASA_OK);
    for (size_t r = 0; r < 3; ++r)
    {
        char const* verdict = nullptr;
        ASSERT_EQ(lpasa_table_text(t.ptr, r, "verdict", &verdict), LPASA_OK);
        EXPECT_EQ(std::string(verdict), "equality-case");
    }
}

}  // namespace
