#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

namespace
{
struct Run
{
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// runs the tool with stdout and stderr captured to temp files
Run run(std::string const& args)
{
    static int counter = 0;
    auto const base = testing::TempDir() + "/cli_" + std::to_string(counter++);
    auto const cmd = std::string(LPASA_CLI) + " " + args + " >" + base + ".out 2>" + base
                     + ".err";
    int const status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(base + ".out");
    r.err = slurp(base + ".err");
    std::remove((base + ".out").c_str());
    std::remove((base + ".err").c_str());
    return r;
}

std::string body(char const* name)
{
    return std::string("--body ") + LPASA_DATA_DIR + "/bodies/" + name;
}

std::vector<std::vector<std::string>> csv_rows(std::string const& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
    {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

TEST(Cli, DiscValues)
{
    auto const r = run("asp " + body("disc.json") + " --p 0,1,inf");
    ASSERT_EQ(r.code, 0) << r.err;
    auto const rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0][0], "body");
    EXPECT_EQ(rows[0][2], "value");
    for (std::size_t i = 1; i < rows.size(); ++i)
        EXPECT_NEAR(std::stod(rows[i][2]), 2 * 3.14159265358979323846, 1e-12);
}

TEST(Cli, SquareConventionAndDivergence)
{
    auto const one = run("asp " + body("square.json") + " --p 1");
    ASSERT_EQ(one.code, 0) << one.err;
    EXPECT_EQ(std::stod(csv_rows(one.out)[1][2]), 0);

    auto const div = run("asp " + body("square.json") + " --p -1");
    EXPECT_EQ(div.code, 3);
    EXPECT_NE(div.err.find("--allow-divergent"), std::string::npos);
    EXPECT_EQ(csv_rows(div.out)[1][2], "inf");
    EXPECT_EQ(run("asp " + body("square.json") + " --p -1 --allow-divergent").code, 0);
}

TEST(Cli, JsonOutputAndFile)
{
    auto const path = testing::TempDir() + "/cli_table.json";
    auto const r = run("asp " + body("ellipse_2_1.json") + " --p 1,2 --format json --out "
                       + path);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    auto const j = nlohmann::json::parse(slurp(path));
    ASSERT_EQ(j.size(), 2u);
    EXPECT_NEAR(j[0]["value"].get<double>(), 2 * 3.14159265358979323846 * std::cbrt(2.0),
                1e-12);
    std::remove(path.c_str());
}

TEST(Cli, ConfigErrors)
{
    EXPECT_EQ(run("asp " + body("disc.json") + " --p -2").code, 2);
    EXPECT_EQ(run("asp " + body("disc.json") + " --p abc").code, 2);
    EXPECT_EQ(run("asp " + body("disc.json")).code, 2);
    EXPECT_EQ(run("asp --body /nonexistent.json --p 1").code, 2);
    EXPECT_EQ(run("asp " + body("disc.json") + " --p 1 --format xml").code, 2);
    EXPECT_EQ(run("asp " + body("disc.json") + " --p 1 --grid bogus:3").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("suite --count 1 --santalo-c 2").code, 2);
    EXPECT_EQ(run("floating " + body("disc.json") + " --schedule GEOM:1e-2:0.5:4").code, 2);
    EXPECT_EQ(run("floating " + body("disc.json") + " --dirs 8").code, 2);
    EXPECT_EQ(run("floating " + body("ellipsoid_1_2_3.json")).code, 2);
}

TEST(Cli, Help)
{
    auto const r = run("--help");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("suite"), std::string::npos);
    EXPECT_EQ(run("asp --help").code, 0);
}

TEST(Cli, Duality)
{
    auto const r = run("duality " + body("ellipse_1.5_1.json"));
    ASSERT_EQ(r.code, 0) << r.err;
    // params hold commas, so count verdicts rather than splitting cells
    int equal = 0;
    for (auto pos = r.out.find(",equality-case,"); pos != std::string::npos;
         pos = r.out.find(",equality-case,", pos + 1))
        ++equal;
    EXPECT_EQ(equal, 3);
}

TEST(Cli, FloatingSquareDivergesButSucceeds)
{
    auto const r = run("floating " + body("square.json")
                       + " --schedule GEOM:1e-2:4:5 --dirs 256");
    ASSERT_EQ(r.code, 0) << r.err;
    auto const rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_NE(r.out.find("inf"), std::string::npos);
}

TEST(Cli, SuiteSmallAndDeterministic)
{
    auto const a = run("suite --seed 3 --count 2");
    auto const b = run("suite --seed 3 --count 2");
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.find("violated"), std::string::npos);
    auto const c = run("suite --seed 4 --count 2");
    EXPECT_NE(a.out, c.out);
}

TEST(Cli, Examples)
{
    auto const cube = run("cube-example --dim 3");
    ASSERT_EQ(cube.code, 0) << cube.err;
    EXPECT_EQ(csv_rows(cube.out).size(), 8u);
    auto const rounded = run("rounded-example");
    ASSERT_EQ(rounded.code, 0) << rounded.err;
    EXPECT_EQ(rounded.out.find("violated"), std::string::npos);
    EXPECT_EQ(run("rounded-example --R 5").code, 2);
}

}  // namespace
