#include "lpasa/lpasa.h"

#include <cmath>
#include <deque>
#include <exception>
#include <fstream>
#include <new>
#include <string>

#include "lpasa/asa.hpp"
#include "lpasa/body_json.hpp"
#include "lpasa/commands.hpp"
#include "lpasa/error.hpp"

struct lpasa_body
{
    lpasa::ConvexBody body;
};

struct lpasa_table
{
    lpasa::Table table;
    // Backing storage for strings handed out to the caller; a deque keeps
    // earlier pointers valid as it grows.
    mutable std::deque<std::string> strings;
};

namespace
{
thread_local std::string last_error;

lpasa_status to_status(lpasa::ErrorCode code)
{
    using lpasa::ErrorCode;
    switch (code)
    {
        case ErrorCode::config: return LPASA_ERR_CONFIG;
        case ErrorCode::exponent: return LPASA_ERR_EXPONENT;
        case ErrorCode::unsupported_kind: return LPASA_ERR_UNSUPPORTED_KIND;
        case ErrorCode::precondition: return LPASA_ERR_PRECONDITION;
        case ErrorCode::degenerate_body: return LPASA_ERR_DEGENERATE_BODY;
        case ErrorCode::geometry: return LPASA_ERR_GEOMETRY;
        case ErrorCode::parse: return LPASA_ERR_PARSE;
        case ErrorCode::io: return LPASA_ERR_IO;
        case ErrorCode::internal: return LPASA_ERR_INTERNAL;
    }
    return LPASA_ERR_INTERNAL;
}

lpasa_status set_error(lpasa_status status, std::string msg)
{
    last_error = std::move(msg);
    return status;
}

//! Run \p fn, translating exceptions into a status and the error message.
template<class F>
lpasa_status guarded(F&& fn)
{
    try
    {
        fn();
        return LPASA_OK;
    }
    catch (lpasa::Error const& e)
    {
        return set_error(to_status(e.code()), e.what());
    }
    catch (std::bad_alloc const&)
    {
        return set_error(LPASA_ERR_INTERNAL, "out of memory");
    }
    catch (std::exception const& e)
    {
        return set_error(LPASA_ERR_INTERNAL, e.what());
    }
    catch (...)
    {
        return set_error(LPASA_ERR_INTERNAL, "unknown exception");
    }
}

#define LPASA_REQUIRE(ARG)                                                    \
    do                                                                        \
    {                                                                         \
        if (!(ARG))                                                           \
            return set_error(LPASA_ERR_NULL_ARGUMENT, #ARG " is null");       \
    } while (0)

lpasa::TableFormat table_format(lpasa_format format)
{
    switch (format)
    {
    case LPASA_FORMAT_CSV:
        return lpasa::TableFormat::csv;
    case LPASA_FORMAT_JSON:
        return lpasa::TableFormat::json;
    }
    lpasa::fail(lpasa::ErrorCode::config, "unknown output format");
}

std::string grid_spec(char const* grid)
{
    return grid ? std::string(grid) : std::string();
}

std::vector<double> to_vector(double const* xs, std::size_t count)
{
    return xs ? std::vector<double>(xs, xs + count) : std::vector<double>{};
}

lpasa_method to_method(lpasa::AsaMethod m)
{
    return static_cast<lpasa_method>(static_cast<int>(m));
}

void fill_value(lpasa::AsaValue const& v, lpasa_value* out)
{
    out->p = v.p;
    out->value = v.value;
    out->error_estimate = v.error_estimate;
    out->divergent = v.divergent ? 1 : 0;
    out->method = to_method(v.method);
}

lpasa_status make_table(lpasa::Table table, lpasa_table** out)
{
    *out = new lpasa_table{std::move(table), {}};
    return LPASA_OK;
}

template<class F>
lpasa_status table_command(lpasa_table** out, F&& build)
{
    LPASA_REQUIRE(out);
    *out = nullptr;
    return guarded([&] { make_table(build(), out); });
}

lpasa_status find_cell(lpasa_table const* t, std::size_t row, char const* column,
                       lpasa::Cell const** cell)
{
    LPASA_REQUIRE(t);
    LPASA_REQUIRE(column);
    int const c = t->table.column(column);
    if (c < 0)
        return set_error(LPASA_ERR_OUT_OF_RANGE,
                         std::string("no column named '") + column + "'");
    if (row >= t->table.rows.size())
        return set_error(LPASA_ERR_OUT_OF_RANGE, "row index out of range");
    *cell = &t->table.rows[row][c];
    return LPASA_OK;
}

}  // namespace

extern "C" {

const char* lpasa_version(void)
{
    return "1.0.0";
}

const char* lpasa_status_string(lpasa_status status)
{
    switch (status)
    {
        case LPASA_OK: return "ok";
        case LPASA_ERR_NULL_ARGUMENT: return "null argument";
        case LPASA_ERR_CONFIG: return "configuration error";
        case LPASA_ERR_EXPONENT: return "invalid exponent";
        case LPASA_ERR_UNSUPPORTED_KIND: return "unsupported body kind";
        case LPASA_ERR_PRECONDITION: return "precondition violated";
        case LPASA_ERR_DEGENERATE_BODY: return "degenerate body";
        case LPASA_ERR_GEOMETRY: return "geometry error";
        case LPASA_ERR_PARSE: return "parse error";
        case LPASA_ERR_IO: return "i/o error";
        case LPASA_ERR_OUT_OF_RANGE: return "out of range";
        case LPASA_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* lpasa_last_error(void)
{
    return last_error.c_str();
}

lpasa_status lpasa_body_from_json(const char* text, lpasa_body** out)
{
    LPASA_REQUIRE(text);
    LPASA_REQUIRE(out);
    *out = nullptr;
    return guarded([&] { *out = new lpasa_body{lpasa::body_from_json(text)}; });
}

lpasa_status lpasa_body_from_file(const char* path, lpasa_body** out)
{
    LPASA_REQUIRE(path);
    LPASA_REQUIRE(out);
    *out = nullptr;
    return guarded([&] { *out = new lpasa_body{lpasa::body_from_file(path)}; });
}

lpasa_status lpasa_body_polar(const lpasa_body* body, lpasa_body** out)
{
    LPASA_REQUIRE(body);
    LPASA_REQUIRE(out);
    *out = nullptr;
    return guarded([&] { *out = new lpasa_body{lpasa::polar_body(body->body)}; });
}

void lpasa_body_free(lpasa_body* body)
{
    delete body;
}

lpasa_status lpasa_body_dim(const lpasa_body* body, int* out)
{
    LPASA_REQUIRE(body);
    LPASA_REQUIRE(out);
    *out = body->body.dim();
    return LPASA_OK;
}

lpasa_status lpasa_body_label(const lpasa_body* body, const char** out)
{
    LPASA_REQUIRE(body);
    LPASA_REQUIRE(out);
    *out = body->body.label().c_str();
    return LPASA_OK;
}

lpasa_status lpasa_body_is_smooth(const lpasa_body* body, int* out)
{
    LPASA_REQUIRE(body);
    LPASA_REQUIRE(out);
    *out = body->body.is_smooth() ? 1 : 0;
    return LPASA_OK;
}

lpasa_status lpasa_body_volume(const lpasa_body* body, double* out)
{
    LPASA_REQUIRE(body);
    LPASA_REQUIRE(out);
    return guarded([&] { *out = lpasa::volume(body->body); });
}

lpasa_status lpasa_body_support(const lpasa_body* body, const double* u, double* out)
{
    LPASA_REQUIRE(body);
    LPASA_REQUIRE(u);
    LPASA_REQUIRE(out);
    return guarded([&] {
        int const n = body->body.dim();
        lpasa::Vec v(n);
        for (int i = 0; i < n; ++i)
            v[i] = u[i];
        *out = lpasa::support(body->body, lpasa::Direction(v));
    });
}

lpasa_status lpasa_asa(const lpasa_body* body, double p, const char* grid,
                       lpasa_value* out)
{
    LPASA_REQUIRE(body);
    LPASA_REQUIRE(out);
    return guarded([&] {
        auto const g = lpasa::resolve_grid(body->body, grid_spec(grid), 0);
        fill_value(lpasa::asa(body->body, p, g), out);
    });
}

lpasa_status lpasa_asa_boundary_form(const lpasa_body* body, double p,
                                     const char* grid, lpasa_value* out)
{
    LPASA_REQUIRE(body);
    LPASA_REQUIRE(out);
    return guarded([&] {
        auto const g = lpasa::resolve_grid(body->body, grid_spec(grid), 0);
        fill_value(lpasa::asa_boundary_form(body->body, p, g), out);
    });
}

lpasa_status lpasa_run_asp(const lpasa_body* body, const double* ps, size_t count,
                           const char* grid, lpasa_table** out)
{
    LPASA_REQUIRE(body);
    LPASA_REQUIRE(ps);
    return table_command(out, [&] {
        auto const g = lpasa::resolve_grid(body->body, grid_spec(grid), 0);
        return lpasa::asp_table(body->body, to_vector(ps, count), g);
    });
}

lpasa_status lpasa_run_duality(const lpasa_body* body, const double* ps,
                               size_t count, const char* grid, lpasa_table** out)
{
    LPASA_REQUIRE(body);
    LPASA_REQUIRE(ps);
    return table_command(out, [&] {
        auto const g = lpasa::resolve_grid(body->body, grid_spec(grid), 0);
        return lpasa::duality_table(body->body, to_vector(ps, count), g);
    });
}

lpasa_status lpasa_run_floating(const lpasa_body* body, const double* schedule,
                                size_t count, int direction_count,
                                const char* grid, lpasa_table** out)
{
    LPASA_REQUIRE(body);
    LPASA_REQUIRE(schedule);
    return table_command(out, [&] {
        auto const g = lpasa::resolve_grid(body->body, grid_spec(grid), 0);
        return lpasa::floating_table(body->body, to_vector(schedule, count),
                                     direction_count, g);
    });
}

lpasa_status lpasa_run_surface(const lpasa_body* body, const double* ps,
                               size_t count_p, const double* schedule,
                               size_t count, int direction_count,
                               const char* grid, lpasa_table** out)
{
    LPASA_REQUIRE(body);
    LPASA_REQUIRE(schedule);
    return table_command(out, [&] {
        auto const g = lpasa::resolve_grid(body->body, grid_spec(grid), 0);
        return lpasa::surface_table(body->body, to_vector(ps, count_p),
                                    to_vector(schedule, count), direction_count,
                                    g);
    });
}

void lpasa_suite_config_default(lpasa_suite_config* config)
{
    if (!config)
        return;
    lpasa::SuiteConfig d;
    config->seed = d.ensemble.seed;
    config->count = d.ensemble.count;
    config->harmonic_budget = d.ensemble.harmonic_budget;
    config->perturbation_scale = d.ensemble.perturbation_scale;
    config->santalo_c = d.santalo_c;
    config->include_duality = d.include_duality ? 1 : 0;
}

lpasa_status lpasa_run_suite(const lpasa_suite_config* config, lpasa_table** out)
{
    LPASA_REQUIRE(config);
    return table_command(out, [&] {
        if (config->count < 0)
            lpasa::fail(lpasa::ErrorCode::config, "ensemble count must be >= 0");
        lpasa::SuiteConfig c;
        c.ensemble.seed = config->seed;
        c.ensemble.count = config->count;
        c.ensemble.harmonic_budget = config->harmonic_budget;
        c.ensemble.perturbation_scale = config->perturbation_scale;
        c.santalo_c = config->santalo_c;
        c.include_duality = config->include_duality != 0;
        return lpasa::suite_table(c);
    });
}

lpasa_status lpasa_run_cube_example(int dim, const double* deltas, size_t count,
                                    lpasa_table** out)
{
    LPASA_REQUIRE(deltas);
    return table_command(
        out, [&] { return lpasa::cube_table(dim, to_vector(deltas, count)); });
}

lpasa_status lpasa_run_rounded_example(double big_radius, double eps,
                                       const double* ps, size_t count,
                                       lpasa_table** out)
{
    LPASA_REQUIRE(ps);
    return table_command(out, [&] {
        return lpasa::rounded_table(big_radius, eps, to_vector(ps, count));
    });
}

lpasa_status lpasa_table_shape(const lpasa_table* table, size_t* rows,
                               size_t* columns)
{
    LPASA_REQUIRE(table);
    if (rows)
        *rows = table->table.rows.size();
    if (columns)
        *columns = table->table.columns.size();
    return LPASA_OK;
}

lpasa_status lpasa_table_column_name(const lpasa_table* table, size_t column,
                                     const char** out)
{
    LPASA_REQUIRE(table);
    LPASA_REQUIRE(out);
    if (column >= table->table.columns.size())
        return set_error(LPASA_ERR_OUT_OF_RANGE, "column index out of range");
    *out = table->table.columns[column].c_str();
    return LPASA_OK;
}

lpasa_status lpasa_table_number(const lpasa_table* table, size_t row,
                                const char* column, double* out)
{
    LPASA_REQUIRE(out);
    lpasa::Cell const* cell = nullptr;
    if (auto s = find_cell(table, row, column, &cell); s != LPASA_OK)
        return s;
    if (auto const* d = std::get_if<double>(cell))
        *out = *d;
    else if (auto const* k = std::get_if<std::int64_t>(cell))
        *out = static_cast<double>(*k);
    else
        return set_error(LPASA_ERR_CONFIG,
                         std::string("column '") + column + "' holds text");
    return LPASA_OK;
}

lpasa_status lpasa_table_text(const lpasa_table* table, size_t row,
                              const char* column, const char** out)
{
    LPASA_REQUIRE(out);
    lpasa::Cell const* cell = nullptr;
    if (auto s = find_cell(table, row, column, &cell); s != LPASA_OK)
        return s;
    std::string text;
    if (auto const* d = std::get_if<double>(cell))
        text = lpasa::format_number(*d);
    else if (auto const* k = std::get_if<std::int64_t>(cell))
        text = std::to_string(*k);
    else
        text = std::get<std::string>(*cell);
    table->strings.push_back(std::move(text));
    *out = table->strings.back().c_str();
    return LPASA_OK;
}

lpasa_status lpasa_table_counts(const lpasa_table* table, size_t* violations,
                                size_t* divergences)
{
    LPASA_REQUIRE(table);
    if (violations)
        *violations = table->table.violations;
    if (divergences)
        *divergences = table->table.divergences;
    return LPASA_OK;
}

lpasa_status lpasa_table_serialize(const lpasa_table* table, lpasa_format format,
                                   const char** out)
{
    LPASA_REQUIRE(table);
    LPASA_REQUIRE(out);
    return guarded([&] {
        auto const f = table_format(format);
        table->strings.push_back(lpasa::serialize(table->table, f));
        *out = table->strings.back().c_str();
    });
}

lpasa_status lpasa_table_write(const lpasa_table* table, lpasa_format format,
                               const char* path)
{
    LPASA_REQUIRE(table);
    LPASA_REQUIRE(path);
    return guarded([&] {
        auto const f = table_format(format);
        std::ofstream os(path, std::ios::binary);
        if (!os)
            lpasa::fail(lpasa::ErrorCode::io,
                        std::string("cannot open '") + path + "' for writing");
        os << lpasa::serialize(table->table, f);
        if (!os)
            lpasa::fail(lpasa::ErrorCode::io,
                        std::string("failed writing '") + path + "'");
    });
}

void lpasa_table_free(lpasa_table* table)
{
    delete table;
}

}  // extern "C"
