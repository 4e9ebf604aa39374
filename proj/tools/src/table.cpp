#include "duet_cli/table.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace duet::cli {

std::vector<double> Table::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw std::out_of_range("table has no column '" + name + "'");
  const auto index = static_cast<std::size_t>(it - columns.begin());
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(std::get<double>(row.at(index)));
  return out;
}

std::string format_number(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, result.ptr);
}

void write_csv(std::ostream& out, const Table& table) {
  out << "# ";
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (const double* d = std::get_if<double>(&row[i])) out << format_number(*d);
      else out << std::get<std::string>(row[i]);
    }
    out << '\n';
  }
}

}  // namespace duet::cli
