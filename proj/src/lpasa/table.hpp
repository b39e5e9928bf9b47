#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace lpasa
{
//! Integers and text print verbatim; doubles use %.17g, with inf/-inf/nan
//! spelled out so that CSV and JSON stay parseable.
using Cell = std::variant<double, std::int64_t, std::string>;

enum class TableFormat
{
    csv,
    json,
};

/*!
 * Ordered result table shared by every command.
 *
 * Row order is the evaluation order, and serialization is byte-stable for
 * identical contents. The counters summarize the rows so callers can pick
 * an exit status without re-reading them.
 */
struct Table
{
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::size_t violations = 0;
    std::size_t divergences = 0;

    void add_row(std::vector<Cell> row);
    //! Index of a column, or -1.
    int column(std::string const& name) const;
};

std::string format_number(double x);

std::string to_csv(Table const& table);
//! Array of objects keyed by column name, in column order.
std::string to_json(Table const& table);
std::string serialize(Table const& table, TableFormat format);

TableFormat parse_format(std::string const& name);

}  // namespace lpasa
