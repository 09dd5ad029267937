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

#include <charconv>
#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace sentimic {

using Date = std::chrono::year_month_day;

namespace detail {

inline std::optional<int> parse_digits(std::string_view s, std::size_t min_len, std::size_t max_len) {
  if (s.size() < min_len || s.size() > max_len) return std::nullopt;
  int value = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return value;
}

inline std::optional<Date> make_date(int y, int m, int d) {
  Date date{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
            std::chrono::day{static_cast<unsigned>(d)}};
  if (!date.ok()) return std::nullopt;
  return date;
}

}  // namespace detail

/// Parses `YYYY-MM-DD`, also accepting unpadded month/day (`2020-9-9`).
inline std::optional<Date> parse_iso_date(std::string_view s) {
  auto first = s.find('-');
  if (first == std::string_view::npos) return std::nullopt;
  auto second = s.find('-', first + 1);
  if (second == std::string_view::npos) return std::nullopt;
  auto y = detail::parse_digits(s.substr(0, first), 4, 4);
  auto m = detail::parse_digits(s.substr(first + 1, second - first - 1), 1, 2);
  auto d = detail::parse_digits(s.substr(second + 1), 1, 2);
  if (!y || !m || !d) return std::nullopt;
  return detail::make_date(*y, *m, *d);
}

/// Parses the compact `YYYYMMDD` form used by vendor quote files.
inline std::optional<Date> parse_compact_date(std::string_view s) {
  if (s.size() != 8) return std::nullopt;
  auto y = detail::parse_digits(s.substr(0, 4), 4, 4);
  auto m = detail::parse_digits(s.substr(4, 2), 2, 2);
  auto d = detail::parse_digits(s.substr(6, 2), 2, 2);
  if (!y || !m || !d) return std::nullopt;
  return detail::make_date(*y, *m, *d);
}

inline std::string to_iso(const Date& d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()),
                static_cast<unsigned>(d.month()), static_cast<unsigned>(d.day()));
  return buf;
}

inline std::string to_compact(const Date& d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d%02u%02u", static_cast<int>(d.year()),
                static_cast<unsigned>(d.month()), static_cast<unsigned>(d.day()));
  return buf;
}

}  // namespace sentimic
