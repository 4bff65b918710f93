#include "phaselab/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "phaselab/errors.hpp"

namespace phaselab {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  std::size_t e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) throw ConfigError("empty numeric field");
  std::string t = s.substr(b, e - b + 1);
  if (t == "nan") return std::nan("");
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  double x = 0.0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), x);
  if (res.ec != std::errc() || res.ptr != t.data() + t.size())
    throw ConfigError("not a number: '" + s + "'");
  return x;
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw ConfigError("Table: row width does not match header");
  rows.push_back(std::move(row));
}

namespace {

std::string cell_text(const Cell& c) {
  struct {
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(double x) const { return format_double(x); }
    std::string operator()(long long x) const { return std::to_string(x); }
    std::string operator()(bool x) const { return x ? "true" : "false"; }
  } visit;
  return std::visit(visit, c);
}

}  // namespace

void Table::write_csv(std::ostream& os) const {
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << '\n';
  }
}

nlohmann::json Table::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              if (std::isfinite(v)) obj[columns[i]] = v;
              else obj[columns[i]] = nullptr;
            } else {
              obj[columns[i]] = v;
            }
          },
          row[i]);
    }
    arr.push_back(std::move(obj));
  }
  return arr;
}

int CsvData::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<int>(i);
  return -1;
}

double CsvData::number(std::size_t row, int col) const {
  if (col < 0 || row >= rows.size() || static_cast<std::size_t>(col) >= rows[row].size())
    throw ConfigError("csv: field out of range");
  return parse_double(rows[row][static_cast<std::size_t>(col)]);
}

CsvData read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  CsvData d;
  std::string line;
  auto split = [](const std::string& l) {
    std::vector<std::string> f;
    std::stringstream ss(l);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty() && item.back() == '\r') item.pop_back();
      f.push_back(item);
    }
    return f;
  };
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    if (d.header.empty()) {
      d.header = split(line);
      continue;
    }
    auto f = split(line);
    if (f.size() != d.header.size()) throw ConfigError(path + ": row width does not match header");
    d.rows.push_back(std::move(f));
  }
  if (d.header.empty()) throw ConfigError(path + ": missing header");
  return d;
}

}  // namespace phaselab
