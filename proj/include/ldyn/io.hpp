#pragma once

// Tabular output (CSV / JSON records), value-file input and the lo:hi:count
// range syntax shared by the command line tool.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ldyn/axis.hpp"
#include "ldyn/errors.hpp"

namespace ldyn::io {

/// 17 significant digits, enough to round-trip any double.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

using Cell = std::variant<std::monostate, double, long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

enum class Format { Csv, Json };

inline Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw ArgumentError("unknown output format '" + s + "' (csv|json)");
}

inline void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) os << format_double(v);
            else if constexpr (std::is_same_v<T, long>) os << v;
            else if constexpr (std::is_same_v<T, std::string>) os << v;
          },
          row[i]);
    }
    os << '\n';
  }
}

inline void write_json(std::ostream& os, const Table& t) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json rec = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) rec[t.columns[i]] = nullptr;
            else rec[t.columns[i]] = v;
          },
          row[i]);
    }
    arr.push_back(std::move(rec));
  }
  os << arr.dump(2) << '\n';
}

inline void write_table(std::ostream& os, const Table& t, Format f) {
  if (f == Format::Csv) write_csv(os, t);
  else write_json(os, t);
}

/// Strict double parse; the whole token must be consumed.
inline std::optional<double> parse_double(const std::string& s) {
  std::size_t used = 0;
  try {
    const double v = std::stod(s, &used);
    while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
    if (used != s.size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

/// "lo:hi:count"
inline AxisRange parse_range(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 3) throw ArgumentError("range '" + s + "' is not lo:hi:count");
  const auto lo = parse_double(parts[0]);
  const auto hi = parse_double(parts[1]);
  std::size_t used = 0;
  long count = -1;
  try {
    count = std::stol(parts[2], &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (!lo || !hi || used == 0 || used != parts[2].size()) throw ArgumentError("range '" + s + "' is not lo:hi:count");
  AxisRange r{*lo, *hi, count};
  r.validate("range '" + s + "'");
  return r;
}

/// "lo:hi"
inline std::pair<double, double> parse_interval(const std::string& s) {
  const auto parts = split(s, ':');
  std::optional<double> lo, hi;
  if (parts.size() == 2) {
    lo = parse_double(parts[0]);
    hi = parse_double(parts[1]);
  }
  if (!lo || !hi || !(*lo < *hi)) throw ArgumentError("interval '" + s + "' is not lo:hi with lo < hi");
  return {*lo, *hi};
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

/// One real per line. Blank lines and lines starting with '#' are skipped.
inline std::vector<double> read_values(std::istream& in, const std::string& origin = "input") {
  std::vector<double> out;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto v = parse_double(t);
    if (!v) throw ArgumentError(origin + ":" + std::to_string(lineno) + ": not a real number: '" + t + "'");
    out.push_back(*v);
  }
  return out;
}

inline std::vector<double> read_values_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  return read_values(in, path);
}

/// key = value lines; '#' and ';' start comments.
inline std::vector<std::pair<std::string, std::string>> read_key_values(std::istream& in,
                                                                        const std::string& origin) {
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ArgumentError(origin + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key.empty()) throw ArgumentError(origin + ":" + std::to_string(lineno) + ": empty key");
    out.emplace_back(std::move(key), std::move(value));
  }
  return out;
}

}  // namespace ldyn::io
