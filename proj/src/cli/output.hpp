#ifndef MAGCLOCK_CLI_OUTPUT_HPP
#define MAGCLOCK_CLI_OUTPUT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace magclock::cli {

using Cell = std::variant<std::int64_t, double, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

enum class Format { kCsv, kJson };

/// Header line then one line per row, 17 significant digits, LF endings.
void write_csv(std::ostream& out, const Table& table);
/// One JSON object per line with keys in column order.
void write_json_lines(std::ostream& out, const Table& table);
/// Both throw std::runtime_error on a non-finite number before writing anything.
void write_table(std::ostream& out, const Table& table, Format format);

}  // namespace magclock::cli

#endif  // MAGCLOCK_CLI_OUTPUT_HPP
