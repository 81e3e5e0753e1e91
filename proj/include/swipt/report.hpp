#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace swipt {

using Cell = std::variant<std::string, double, std::int64_t>;

/// One CSV's worth of results.
struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row); // throws std::invalid_argument on a width mismatch
};

/// Key/value pairs written on the leading comment line (config hash, seed, ...).
using Meta = std::vector<std::pair<std::string, std::string>>;

/// "# table=<name> k=v ..." comment line, header row, then one line per row.
/// Doubles use 12 significant digits; NaN prints as "nan".
void write_csv(std::ostream& out, const Table& table, const Meta& meta);

/// {"meta": {...}, "tables": [{"name", "columns", "rows": [{col: value}]}]}.
/// Doubles keep full precision; NaN becomes null.
void write_json(std::ostream& out, const std::vector<Table>& tables, const Meta& meta);

} // namespace swipt
