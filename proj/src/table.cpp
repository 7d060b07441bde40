#include "tsrelay/table.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>

#include "tsrelay/errors.hpp"

namespace tsrelay {

std::size_t Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw ParameterError("no column named '" + name + "'");
}

double Table::number(std::size_t row, const std::string& name) const {
  const Cell& cell = rows.at(row).at(column(name));
  if (const auto* d = std::get_if<double>(&cell)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return static_cast<double>(*i);
  return std::numeric_limits<double>::quiet_NaN();
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

struct CellWriter {
  std::ostream& os;
  void operator()(std::monostate) const {}
  void operator()(double v) const { os << format_number(v); }
  void operator()(std::int64_t v) const { os << v; }
  void operator()(const std::string& v) const { os << v; }
};

}  // namespace

void write_csv(const Table& table, std::ostream& os) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) os << ',';
    os << table.columns[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      std::visit(CellWriter{os}, row[i]);
    }
    os << '\n';
  }
}

void write_csv_file(const Table& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_csv(table, out);
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace tsrelay
