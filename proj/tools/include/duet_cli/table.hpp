#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace duet::cli {

using Cell = std::variant<double, std::string>;

/// Column-oriented result of a task, written as CSV.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Values of a numeric column (throws std::out_of_range for unknown names).
  std::vector<double> column(const std::string& name) const;
};

/// Shortest-exact formatting with 17 significant digits, '.' decimal point.
std::string format_number(double value);

/// First line "# col1,col2,...", then one comma-separated line per row.
void write_csv(std::ostream& out, const Table& table);

}  // namespace duet::cli
