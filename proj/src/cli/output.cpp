#include "output.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include "json.hpp"

namespace magclock::cli {

namespace {

std::string csv_field(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return fmt::format("{:.17g}", v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const {
      if (v.find_first_of(",\"\n") == std::string::npos) return v;
      std::string quoted = "\"";
      for (char c : v) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      return quoted + '"';
    }
  };
  return std::visit(Visitor{}, cell);
}

void check_finite(const Table& table) {
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (const auto* v = std::get_if<double>(&row[i]); v && !std::isfinite(*v)) {
        throw std::runtime_error("non-finite value in column '" + table.columns[i] + "'");
      }
    }
  }
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("row width does not match header");
  rows.push_back(std::move(row));
}

void write_csv(std::ostream& out, const Table& table) {
  std::string text;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) text += ',';
    text += table.columns[i];
  }
  text += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) text += ',';
      text += csv_field(row[i]);
    }
    text += '\n';
  }
  out << text;
}

void write_json_lines(std::ostream& out, const Table& table) {
  std::string text;
  for (const auto& row : table.rows) {
    nlohmann::ordered_json record;
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit([&](const auto& v) { record[table.columns[i]] = v; }, row[i]);
    }
    text += record.dump();
    text += '\n';
  }
  out << text;
}

void write_table(std::ostream& out, const Table& table, Format format) {
  check_finite(table);
  if (format == Format::kCsv) {
    write_csv(out, table);
  } else {
    write_json_lines(out, table);
  }
}

}  // namespace magclock::cli
