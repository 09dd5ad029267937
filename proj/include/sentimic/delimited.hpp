/*
 * Copyright 2026 The sentimic Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Minimal delimiter-separated file support shared by all file formats.
// Fields are split on a single delimiter character and trimmed of ASCII
// blanks, so both `a\tb` and `a | b` layouts read the same way. There is no
// quoting: a field may not contain the delimiter or a line break.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sentimic/error.hpp"

namespace sentimic::delimited {

struct Row {
  std::size_t line = 0;  // 1-based physical line number
  std::vector<std::string> fields;
};

struct Table {
  std::vector<std::string> header;  // lower-cased
  std::vector<Row> rows;
  std::size_t header_line = 0;  // 0 when the stream held no header

  /// Index of the first header column matching any of `names`.
  std::optional<std::size_t> column(std::initializer_list<std::string_view> names) const {
    for (auto name : names) {
      auto it = std::find(header.begin(), header.end(), name);
      if (it != header.end()) return static_cast<std::size_t>(it - header.begin());
    }
    return std::nullopt;
  }
};

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view blanks = " \t\r\n\v\f";
  const auto b = s.find_first_not_of(blanks);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(blanks);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(std::string_view line, char delimiter) {
  std::vector<std::string> out;
  while (true) {
    const auto pos = line.find(delimiter);
    out.emplace_back(trim(line.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    line.remove_prefix(pos + 1);
  }
  return out;
}

inline std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

/// Reads a delimited stream. The first non-blank line is the header; blank
/// lines are skipped everywhere. A UTF-8 byte-order mark is ignored.
inline Table read(std::istream& in, char delimiter) {
  Table table;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (number == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    if (table.header_line == 0) {
      for (auto& f : split(line, delimiter)) table.header.push_back(lower_ascii(f));
      table.header_line = number;
      continue;
    }
    table.rows.push_back(Row{number, split(line, delimiter)});
  }
  return table;
}

/// Shortest representation that parses back to the same double.
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::optional<double> parse_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

inline std::optional<std::int64_t> parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  std::int64_t v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

inline void write_row(std::ostream& out, std::span<const std::string> fields, char delimiter) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const auto& f = fields[i];
    if (f.find(delimiter) != std::string::npos || f.find('\n') != std::string::npos) {
      throw Error(Errc::invalid_data, "field contains the delimiter or a line break: " + f);
    }
    if (i) out.put(delimiter);
    out << f;
  }
  out.put('\n');
}

inline void write_row(std::ostream& out, std::initializer_list<std::string> fields, char delimiter) {
  write_row(out, std::span<const std::string>(fields.begin(), fields.size()), delimiter);
}

}  // namespace sentimic::delimited
