// Command-line front end. Everything goes through the C interface so this
// file doubles as a usage example for it.

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lpasa/lpasa.h"

namespace
{
enum Exit
{
    exit_ok = 0,
    exit_violation = 1,
    exit_config = 2,
    exit_divergent = 3,
};

struct ConfigError
{
    std::string message;
};

double parse_real(std::string const& text)
{
    errno = 0;
    char* end = nullptr;
    double const x = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE)
        throw ConfigError{"not a number: '" + text + "'"};
    return x;
}

//! Comma separated extended reals ("0,1,inf,-inf").
std::vector<double> parse_list(std::string const& text)
{
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size())
    {
        auto const comma = text.find(',', pos);
        auto const item = text.substr(pos, comma == std::string::npos
                                               ? std::string::npos
                                               : comma - pos);
        out.push_back(parse_real(item));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

//! GEOM:start:ratio:count -> start / ratio^k, k = 0..count-1
std::vector<double> parse_schedule(std::string const& text)
{
    std::vector<std::string> parts;
    std::size_t pos = 0;
    for (;;)
    {
        auto const colon = text.find(':', pos);
        parts.push_back(text.substr(pos, colon == std::string::npos
                                             ? std::string::npos
                                             : colon - pos));
        if (colon == std::string::npos)
            break;
        pos = colon + 1;
    }
    if (parts.size() != 4 || parts[0] != "GEOM")
        throw ConfigError{"schedule must be GEOM:start:ratio:count"};
    double const start = parse_real(parts[1]);
    double const ratio = parse_real(parts[2]);
    double const count = parse_real(parts[3]);
    if (!(start > 0) || !(ratio > 1) || count < 1 || count > 64
        || count != static_cast<int>(count))
        throw ConfigError{"schedule needs start > 0, ratio > 1, 1 <= count <= 64"};
    std::vector<double> out;
    double x = start;
    for (int k = 0; k < static_cast<int>(count); ++k, x /= ratio)
        out.push_back(x);
    return out;
}

struct Options
{
    std::string body;
    std::string p;
    std::string grid = "default";
    std::string schedule;
    std::string out;
    std::string format = "csv";
    std::uint64_t seed = 0;
    bool seed_set = false;
    double santalo_c = 0.25;
    bool allow_divergent = false;
    int dirs = 2048;
    int count = 100;
    int dim = 2;
    double big_radius = 100;
    double eps = 0.01;
};

class Runner
{
  public:
    explicit Runner(Options const& opt) : opt_(opt) {}
    ~Runner()
    {
        lpasa_table_free(table_);
        lpasa_body_free(body_);
    }
    Runner(Runner const&) = delete;
    Runner& operator=(Runner const&) = delete;

    int run(std::string const& command);

  private:
    //! Turn a failing status into an exit code after printing the message.
    bool ok(lpasa_status s)
    {
        if (s == LPASA_OK)
            return true;
        std::fprintf(stderr, "error: %s: %s\n", lpasa_status_string(s),
                     lpasa_last_error());
        return false;
    }
    void load_body();
    std::string grid() const;
    lpasa_status dispatch(std::string const& command);
    int emit();

    Options const& opt_;
    lpasa_body* body_ = nullptr;
    lpasa_table* table_ = nullptr;
};

void Runner::load_body()
{
    if (opt_.body.empty())
        throw ConfigError{"--body is required"};
    if (!ok(lpasa_body_from_file(opt_.body.c_str(), &body_)))
        throw ConfigError{};
}

std::string Runner::grid() const
{
    // Monte Carlo grids take the seed from --seed unless the spec pins one
    if (opt_.seed_set && opt_.grid.rfind("mc:", 0) == 0
        && opt_.grid.find('@') == std::string::npos)
        return opt_.grid + "@" + std::to_string(opt_.seed);
    return opt_.grid;
}

lpasa_status Runner::dispatch(std::string const& command)
{
    auto const g = this->grid();
    if (command == "asp")
    {
        if (opt_.p.empty())
            throw ConfigError{"--p is required"};
        this->load_body();
        auto const ps = parse_list(opt_.p);
        return lpasa_run_asp(body_, ps.data(), ps.size(), g.c_str(), &table_);
    }
    if (command == "duality")
    {
        this->load_body();
        auto const ps = parse_list(opt_.p.empty() ? "1,2,4" : opt_.p);
        return lpasa_run_duality(body_, ps.data(), ps.size(), g.c_str(), &table_);
    }
    if (command == "floating" || command == "surface")
    {
        this->load_body();
        bool const floating = command == "floating";
        auto const sched = parse_schedule(
            !opt_.schedule.empty() ? opt_.schedule
            : floating             ? "GEOM:1e-2:4:7"
                                   : "GEOM:0.4:2:7");
        if (floating)
            return lpasa_run_floating(body_, sched.data(), sched.size(),
                                      opt_.dirs, g.c_str(), &table_);
        auto const ps = opt_.p.empty() ? std::vector<double>{} : parse_list(opt_.p);
        return lpasa_run_surface(body_, ps.data(), ps.size(), sched.data(),
                                 sched.size(), opt_.dirs, g.c_str(), &table_);
    }
    if (command == "suite")
    {
        lpasa_suite_config cfg;
        lpasa_suite_config_default(&cfg);
        if (opt_.seed_set)
            cfg.seed = opt_.seed;
        cfg.count = opt_.count;
        cfg.santalo_c = opt_.santalo_c;
        return lpasa_run_suite(&cfg, &table_);
    }
    if (command == "cube-example")
    {
        auto const deltas = parse_schedule(
            opt_.schedule.empty() ? "GEOM:1e-2:10:7" : opt_.schedule);
        return lpasa_run_cube_example(opt_.dim, deltas.data(), deltas.size(),
                                      &table_);
    }
    if (command == "rounded-example")
    {
        auto const ps = parse_list(opt_.p.empty() ? "0,1,2,-1,-0.5,-4" : opt_.p);
        return lpasa_run_rounded_example(opt_.big_radius, opt_.eps, ps.data(),
                                         ps.size(), &table_);
    }
    throw ConfigError{"unknown command '" + command + "'"};
}

int Runner::emit()
{
    auto const fmt = opt_.format == "json" ? LPASA_FORMAT_JSON : LPASA_FORMAT_CSV;
    if (opt_.out.empty())
    {
        char const* text = nullptr;
        if (!ok(lpasa_table_serialize(table_, fmt, &text)))
            return exit_config;
        std::fputs(text, stdout);
    }
    else if (!ok(lpasa_table_write(table_, fmt, opt_.out.c_str())))
    {
        return exit_config;
    }

    std::size_t violations = 0;
    std::size_t divergences = 0;
    lpasa_table_counts(table_, &violations, &divergences);
    if (violations > 0)
    {
        std::fprintf(stderr, "%zu inequality violation(s)\n", violations);
        return exit_violation;
    }
    if (divergences > 0 && !opt_.allow_divergent)
    {
        std::fprintf(stderr,
                     "%zu divergent value(s); pass --allow-divergent to accept\n",
                     divergences);
        return exit_divergent;
    }
    return exit_ok;
}

int Runner::run(std::string const& command)
{
    try
    {
        if (!ok(this->dispatch(command)))
            return exit_config;
    }
    catch (ConfigError const& e)
    {
        if (!e.message.empty())
            std::fprintf(stderr, "error: %s\n", e.message.c_str());
        return exit_config;
    }
    return this->emit();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"L_p affine surface areas, floating and surface bodies, "
                 "and inequality checks"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", opt.out, "Output path (stdout if omitted)");
        sub->add_option("--format", opt.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_flag("--allow-divergent", opt.allow_divergent,
                      "Exit 0 even when a value diverges");
    };
    auto add_body = [&](CLI::App* sub) {
        sub->add_option("--body", opt.body, "JSON body spec")->required();
        sub->add_option("--grid", opt.grid,
                        "circle:N, sphere3:AxB, mc:N, piecewise:N or default");
        sub->add_option("--seed", opt.seed, "Seed for Monte Carlo grids")
            ->each([&](std::string const&) { opt.seed_set = true; });
    };

    auto* asp = app.add_subcommand("asp", "Tabulate as_p for a list of exponents");
    add_body(asp);
    asp->add_option("--p", opt.p, "Comma separated exponents (inf allowed)")
        ->required();
    add_common(asp);

    auto* dual = app.add_subcommand("duality", "Compare as_p(K) with as_{n^2/p}(K°)");
    add_body(dual);
    dual->add_option("--p", opt.p, "Comma separated exponents (default 1,2,4)");
    add_common(dual);

    auto* fl = app.add_subcommand("floating", "Floating body polar-volume limit");
    add_body(fl);
    fl->add_option("--schedule", opt.schedule,
                   "GEOM:start:ratio:count (default GEOM:1e-2:4:7)");
    fl->add_option("--dirs", opt.dirs, "Number of cut directions")
        ->check(CLI::Range(64, 1 << 20));
    add_common(fl);

    auto* sf = app.add_subcommand("surface", "Surface body polar-volume limit");
    add_body(sf);
    sf->add_option("--p", opt.p,
                   "Exponents for the f_p weight (constant weight 1 if omitted)");
    sf->add_option("--schedule", opt.schedule,
                   "GEOM:start:ratio:count (default GEOM:0.4:2:7)");
    sf->add_option("--dirs", opt.dirs, "Number of cut directions")
        ->check(CLI::Range(64, 1 << 20));
    add_common(sf);

    auto* suite = app.add_subcommand("suite", "Run the inequality suite");
    suite->add_option("--seed", opt.seed, "Ensemble seed")
        ->each([&](std::string const&) { opt.seed_set = true; });
    suite->add_option("--count", opt.count, "Number of random bodies")
        ->check(CLI::Range(0, 100000));
    suite->add_option("--santalo-c", opt.santalo_c,
                      "Constant c in the p < -n lower bound");
    add_common(suite);

    auto* cube = app.add_subcommand("cube-example", "Closed-form cube cut ratios");
    cube->add_option("--dim", opt.dim, "Dimension")->check(CLI::Range(2, 20));
    cube->add_option("--schedule", opt.schedule,
                     "GEOM:start:ratio:count (default GEOM:1e-2:10:7)");
    add_common(cube);

    auto* rounded = app.add_subcommand("rounded-example",
                                       "Bounds on the rounded intersection body");
    rounded->add_option("--R", opt.big_radius, "Radius of the big arcs");
    rounded->add_option("--eps", opt.eps, "Radius of the corner arcs");
    rounded->add_option("--p", opt.p, "Exponents (default 0,1,2,-1,-0.5,-4)");
    add_common(rounded);

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        // help and version requests exit 0 through app.exit
        return app.exit(e) == 0 ? exit_ok : exit_config;
    }

    Runner runner(opt);
    return runner.run(app.get_subcommands().front()->get_name());
}
