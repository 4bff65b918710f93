#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace phaselab {

// Shortest round-trip decimal, '.' separator regardless of locale; "nan" and
// "inf" for non-finite values.
std::string format_double(double x);

// Locale-independent parse of a whole field. Throws ConfigError.
double parse_double(const std::string& s);

using Cell = std::variant<std::string, double, long long, bool>;

// Column-major record set emitted as CSV (header row) or JSON.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
  void write_csv(std::ostream& os) const;
  nlohmann::json to_json() const;  // array of objects
};

struct CsvData {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // -1 when absent.
  int column(const std::string& name) const;
  double number(std::size_t row, int col) const;
};

// Plain comma-separated values without quoting. Throws ConfigError.
CsvData read_csv(const std::string& path);

}  // namespace phaselab
