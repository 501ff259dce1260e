#pragma once

// Text formats for vectors: inline comma lists (with a KxV repetition
// shorthand, e.g. "198x0.0025,2x0.2525") and one-column CSV files with an
// optional header line.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "renyi/error.hpp"

namespace renyi::io {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

inline double to_double(std::string_view s) {
  double v = 0.0;
  if (!parse_double(s, v)) {
    throw Error(ErrorKind::ParseError, "not a number: '" + std::string(trim(s)) + "'");
  }
  return v;
}

}  // namespace detail

/// "0.4,0.4,0.2" or "10x0.01,2x0.15,2x0.3".
inline std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  if (detail::trim(text).empty()) throw Error(ErrorKind::ParseError, "empty list");
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = detail::trim(text.substr(start, end - start));
    const auto x = item.find_first_of("xX");
    if (x == std::string_view::npos) {
      out.push_back(detail::to_double(item));
    } else {
      std::size_t count = 0;
      const std::string_view head = detail::trim(item.substr(0, x));
      const auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), count);
      if (ec != std::errc() || ptr != head.data() + head.size() || count == 0) {
        throw Error(ErrorKind::ParseError, "bad repetition count in '" + std::string(item) + "'");
      }
      out.insert(out.end(), count, detail::to_double(item.substr(x + 1)));
    }
    start = end + 1;
  }
  return out;
}

/// One value per line; blank lines ignored; a first line equal to
/// `column` (optionally quoted) is taken as the header.
inline std::vector<double> parse_column_csv(std::istream& in, std::string_view column) {
  std::vector<double> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    std::string_view cell = detail::trim(line);
    if (cell.empty()) continue;
    if (cell.find(',') != std::string_view::npos) {
      throw Error(ErrorKind::ParseError, "expected a single column, got '" + std::string(cell) + "'");
    }
    if (first) {
      first = false;
      std::string_view name = cell;
      if (name.size() >= 2 && name.front() == '"' && name.back() == '"') name = name.substr(1, name.size() - 2);
      if (name == column) continue;
    }
    out.push_back(detail::to_double(cell));
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, "no values in CSV input");
  return out;
}

/// A path to an existing file is read as one-column CSV; anything else is
/// parsed as an inline list.
inline std::vector<double> read_vector(const std::string& source, std::string_view column) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::ifstream in(source);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + source);
    return parse_column_csv(in, column);
  }
  return parse_list(source);
}

/// Shortest decimal string that reads back to the same double.
inline std::string format(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return {buf, ptr};
}

}  // namespace renyi::io
