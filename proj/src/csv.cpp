#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "gravcat/scenario.hpp"

namespace gravcat {

std::string format_number(double v) {
  if (!std::isfinite(v)) throw NumericError("cannot format non-finite value");
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_csv(const ResultTable& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.header.size(); ++i) out << (i == 0 ? "" : ",") << table.header[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i == 0 ? "" : ",") << format_number(row[i]);
    out << '\n';
  }
}

void emit_csv(const ResultTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_csv(table, out);
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

} // namespace gravcat
