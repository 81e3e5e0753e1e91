#include "swipt/report.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include "json.hpp"

namespace swipt {

void Table::add_row(std::vector<Cell> row)
{
    if (row.size() != columns.size())
        throw std::invalid_argument(
            fmt::format("table {}: row has {} cells, expected {}", name, row.size(), columns.size()));
    rows.push_back(std::move(row));
}

namespace {

std::string csv_cell(const Cell& cell)
{
    if (const auto* s = std::get_if<std::string>(&cell)) {
        if (s->find_first_of(",\"\n") == std::string::npos) return *s;
        std::string quoted = "\"";
        for (char ch : *s) {
            if (ch == '"') quoted += '"';
            quoted += ch;
        }
        return quoted + "\"";
    }
    if (const auto* i = std::get_if<std::int64_t>(&cell)) return fmt::format("{}", *i);
    const double d = std::get<double>(cell);
    if (std::isnan(d)) return "nan";
    return fmt::format("{:.12g}", d);
}

} // namespace

void write_csv(std::ostream& out, const Table& table, const Meta& meta)
{
    std::string line = "# table=" + table.name;
    for (const auto& [k, v] : meta) line += " " + k + "=" + v;
    out << line << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
        out << '\n';
    }
}

void write_json(std::ostream& out, const std::vector<Table>& tables, const Meta& meta)
{
    using json = nlohmann::ordered_json;
    json doc;
    doc["meta"] = json::object();
    for (const auto& [k, v] : meta) doc["meta"][k] = v;
    doc["tables"] = json::array();
    for (const Table& t : tables) {
        json jt;
        jt["name"] = t.name;
        jt["columns"] = t.columns;
        jt["rows"] = json::array();
        for (const auto& row : t.rows) {
            json jr = json::object();
            for (std::size_t i = 0; i < row.size(); ++i) {
                std::visit(
                    [&](const auto& v) {
                        using T = std::decay_t<decltype(v)>;
                        if constexpr (std::is_same_v<T, double>)
                            jr[t.columns[i]] = std::isfinite(v) ? json(v) : json(nullptr);
                        else
                            jr[t.columns[i]] = v;
                    },
                    row[i]);
            }
            jt["rows"].push_back(std::move(jr));
        }
        doc["tables"].push_back(std::move(jt));
    }
    out << doc.dump(2) << '\n';
}

} // namespace swipt
