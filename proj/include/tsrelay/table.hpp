#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace tsrelay {

/// Empty cell, number, integer or text.
using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Index of `name` in `columns`; throws ParameterError if absent.
  std::size_t column(const std::string& name) const;
  /// Numeric value at (row, column name); NaN for empty cells.
  double number(std::size_t row, const std::string& name) const;
};

/// Shortest decimal representation that round-trips (std::to_chars).
std::string format_number(double v);

/// Comma-separated, one header line, '\n' line ends, no quoting (cells never contain commas).
void write_csv(const Table& table, std::ostream& os);
void write_csv_file(const Table& table, const std::filesystem::path& path);

}  // namespace tsrelay
