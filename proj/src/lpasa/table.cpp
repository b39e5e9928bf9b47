#include "table.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "error.hpp"

namespace lpasa
{
void Table::add_row(std::vector<Cell> row)
{
    if (row.size() != columns.size())
        fail(ErrorCode::internal, "row width does not match the header");
    rows.push_back(std::move(row));
}

int Table::column(std::string const& name) const
{
    for (std::size_t i = 0; i < columns.size(); ++i)
    {
        if (columns[i] == name)
            return static_cast<int>(i);
    }
    return -1;
}

std::string format_number(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace
{
std::string csv_escape(std::string const& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

struct CsvCell
{
    std::string operator()(double x) const { return format_number(x); }
    std::string operator()(std::int64_t x) const { return std::to_string(x); }
    std::string operator()(std::string const& s) const { return csv_escape(s); }
};

}  // namespace

std::string to_csv(Table const& table)
{
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out += (i ? "," : "") + csv_escape(table.columns[i]);
    out += '\n';
    for (auto const& row : table.rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
        {
            if (i)
                out += ',';
            out += std::visit(CsvCell{}, row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(Table const& table)
{
    // Doubles go through %.17g rather than the library's shortest form so
    // the two formats print identical digits.
    using json = nlohmann::ordered_json;
    std::string out = "[";
    for (std::size_t r = 0; r < table.rows.size(); ++r)
    {
        out += r ? ",\n  {" : "\n  {";
        auto const& row = table.rows[r];
        for (std::size_t i = 0; i < row.size(); ++i)
        {
            if (i)
                out += ", ";
            out += json(table.columns[i]).dump() + ": ";
            if (auto const* d = std::get_if<double>(&row[i]))
                out += std::isfinite(*d) ? format_number(*d)
                                         : json(format_number(*d)).dump();
            else if (auto const* k = std::get_if<std::int64_t>(&row[i]))
                out += std::to_string(*k);
            else
                out += json(std::get<std::string>(row[i])).dump();
        }
        out += "}";
    }
    out += table.rows.empty() ? "]\n" : "\n]\n";
    return out;
}

std::string serialize(Table const& table, TableFormat format)
{
    return format == TableFormat::csv ? to_csv(table) : to_json(table);
}

TableFormat parse_format(std::string const& name)
{
    if (name == "csv")
        return TableFormat::csv;
    if (name == "json")
        return TableFormat::json;
    fail(ErrorCode::config, "format must be csv or json, got '" + name + "'");
}

}  // namespace lpasa
