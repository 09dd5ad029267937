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

#include <cmath>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sentimic/date.hpp"
#include "sentimic/delimited.hpp"
#include "sentimic/error.hpp"

namespace sentimic {

/// Date-ordered sequence of finite values. Dates are strictly increasing.
class TimeSeries {
 public:
  TimeSeries() = default;

  TimeSeries(std::vector<Date> dates, std::vector<double> values)
      : dates_(std::move(dates)), values_(std::move(values)) {
    if (dates_.size() != values_.size()) {
      throw Error(Errc::invalid_argument, "series dates and values differ in length");
    }
    for (std::size_t i = 0; i < dates_.size(); ++i) {
      if (!std::isfinite(values_[i])) {
        throw Error(Errc::invalid_data, "non-finite value at " + to_iso(dates_[i]));
      }
      if (i > 0 && !(dates_[i - 1] < dates_[i])) {
        throw Error(dates_[i - 1] == dates_[i] ? Errc::duplicate_date : Errc::invalid_data,
                    "series dates not strictly increasing at " + to_iso(dates_[i]));
      }
    }
  }

  std::size_t size() const noexcept { return dates_.size(); }
  bool empty() const noexcept { return dates_.empty(); }
  std::span<const Date> dates() const noexcept { return dates_; }
  std::span<const double> values() const noexcept { return values_; }

  friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

 private:
  std::vector<Date> dates_;
  std::vector<double> values_;
};

/// Two series joined on date; x and y share the date axis.
class PairedSeries {
 public:
  PairedSeries() = default;

  PairedSeries(std::vector<Date> dates, std::vector<double> x, std::vector<double> y)
      : dates_(std::move(dates)), x_(std::move(x)), y_(std::move(y)) {
    if (dates_.size() != x_.size() || dates_.size() != y_.size()) {
      throw Error(Errc::invalid_argument, "paired series components differ in length");
    }
    for (std::size_t i = 0; i < dates_.size(); ++i) {
      if (!std::isfinite(x_[i]) || !std::isfinite(y_[i])) {
        throw Error(Errc::invalid_data, "non-finite value at " + to_iso(dates_[i]));
      }
      if (i > 0 && !(dates_[i - 1] < dates_[i])) {
        throw Error(Errc::invalid_data, "paired dates not strictly increasing at " + to_iso(dates_[i]));
      }
    }
  }

  /// Pairs without calendar dates (synthetic data, tests). Dates are
  /// consecutive days from 2000-01-01.
  static PairedSeries from_values(std::vector<double> x, std::vector<double> y) {
    using namespace std::chrono;
    std::vector<Date> dates;
    dates.reserve(x.size());
    const sys_days start = Date{year{2000}, January, day{1}};
    for (std::size_t i = 0; i < x.size(); ++i) dates.emplace_back(start + days{static_cast<int>(i)});
    return PairedSeries(std::move(dates), std::move(x), std::move(y));
  }

  std::size_t size() const noexcept { return dates_.size(); }
  std::span<const Date> dates() const noexcept { return dates_; }
  std::span<const double> x() const noexcept { return x_; }
  std::span<const double> y() const noexcept { return y_; }

  PairedSeries swapped() const { return PairedSeries(dates_, y_, x_); }

  friend bool operator==(const PairedSeries&, const PairedSeries&) = default;

 private:
  std::vector<Date> dates_;
  std::vector<double> x_;
  std::vector<double> y_;
};

// Series file: header `date, value` (extra columns ignored), ISO dates.
inline TimeSeries read_series(std::istream& in, char delimiter = '\t') {
  auto table = delimited::read(in, delimiter);
  auto date_col = table.column({"date"});
  auto value_col = table.column({"value"});
  if (!date_col || !value_col) {
    throw ParseError(table.header_line, "series file needs `date` and `value` columns");
  }
  std::vector<Date> dates;
  std::vector<double> values;
  for (const auto& row : table.rows) {
    if (row.fields.size() != table.header.size()) throw ParseError(row.line, "wrong column count");
    auto d = parse_iso_date(row.fields[*date_col]);
    if (!d) throw ParseError(row.line, "bad date `" + row.fields[*date_col] + "`");
    auto v = delimited::parse_double(row.fields[*value_col]);
    if (!v) throw ParseError(row.line, "bad value `" + row.fields[*value_col] + "`");
    dates.push_back(*d);
    values.push_back(*v);
  }
  return TimeSeries(std::move(dates), std::move(values));
}

inline void write_series(std::ostream& out, const TimeSeries& s, char delimiter = '\t') {
  delimited::write_row(out, {"date", "value"}, delimiter);
  for (std::size_t i = 0; i < s.size(); ++i) {
    delimited::write_row(out, {to_iso(s.dates()[i]), delimited::format_double(s.values()[i])}, delimiter);
  }
}

// Paired file: header `date, x, y`; `sentiment, price` name the same columns.
inline PairedSeries read_paired(std::istream& in, char delimiter = '\t') {
  auto table = delimited::read(in, delimiter);
  auto date_col = table.column({"date"});
  auto x_col = table.column({"x", "sentiment"});
  auto y_col = table.column({"y", "price"});
  if (!date_col || !x_col || !y_col) {
    throw ParseError(table.header_line, "paired file needs `date`, `x` and `y` columns");
  }
  std::vector<Date> dates;
  std::vector<double> xs, ys;
  for (const auto& row : table.rows) {
    if (row.fields.size() != table.header.size()) throw ParseError(row.line, "wrong column count");
    auto d = parse_iso_date(row.fields[*date_col]);
    auto x = delimited::parse_double(row.fields[*x_col]);
    auto y = delimited::parse_double(row.fields[*y_col]);
    if (!d) throw ParseError(row.line, "bad date `" + row.fields[*date_col] + "`");
    if (!x || !y) throw ParseError(row.line, "bad numeric value");
    dates.push_back(*d);
    xs.push_back(*x);
    ys.push_back(*y);
  }
  return PairedSeries(std::move(dates), std::move(xs), std::move(ys));
}

inline void write_paired(std::ostream& out, const PairedSeries& p, char delimiter = '\t',
                         const std::string& x_name = "x", const std::string& y_name = "y") {
  delimited::write_row(out, {"date", x_name, y_name}, delimiter);
  for (std::size_t i = 0; i < p.size(); ++i) {
    delimited::write_row(out,
                         {to_iso(p.dates()[i]), delimited::format_double(p.x()[i]),
                          delimited::format_double(p.y()[i])},
                         delimiter);
  }
}

}  // namespace sentimic
