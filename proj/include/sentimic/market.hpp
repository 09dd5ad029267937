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

#include <algorithm>
#include <cmath>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sentimic/date.hpp"
#include "sentimic/delimited.hpp"
#include "sentimic/error.hpp"
#include "sentimic/series.hpp"

namespace sentimic::market {

/// One trading day of index quotes. Prices are in index points, `pct_chg`
/// in percent.
struct QuoteBar {
  Date date;
  double close = 0.0;
  double open = 0.0;
  double high = 0.0;
  double low = 0.0;
  double pre_close = 0.0;
  double change = 0.0;
  double pct_chg = 0.0;
  double vol = 0.0;
  double amount = 0.0;

  friend bool operator==(const QuoteBar&, const QuoteBar&) = default;
};

inline constexpr double kChangeTolerance = 0.01;

struct QuoteWarning {
  Date date;
  std::string message;
};

struct QuoteLoad {
  std::vector<QuoteBar> bars;  // ascending by date
  std::vector<QuoteWarning> warnings;
};

/// Bar-level consistency checks. Violations are reported, never fatal.
inline std::vector<QuoteWarning> check_bar(const QuoteBar& b) {
  std::vector<QuoteWarning> w;
  if (b.low > std::min(b.open, b.close)) w.push_back({b.date, "low above min(open, close)"});
  if (b.high < std::max(b.open, b.close)) w.push_back({b.date, "high below max(open, close)"});
  if (std::fabs(b.change - (b.close - b.pre_close)) > kChangeTolerance) {
    w.push_back({b.date, "change differs from close - pre_close by more than 0.01"});
  }
  return w;
}

/// Reads a quote file with header
/// `date, close, open, high, low, pre_close, change, pct_chg, vol, amount`
/// (columns in any order, `trade_date` accepted for `date`). Dates are
/// `YYYYMMDD`. Output is sorted ascending whatever the file order.
inline QuoteLoad load_quotes(std::istream& in, char delimiter = '\t') {
  auto table = delimited::read(in, delimiter);
  QuoteLoad result;
  if (table.header_line == 0) return result;

  const auto date_col = table.column({"date", "trade_date"});
  if (!date_col) throw ParseError(table.header_line, "quote file needs a `date` column");
  struct Field {
    std::string_view name;
    double QuoteBar::*member;
  };
  static constexpr Field fields[] = {
      {"close", &QuoteBar::close},         {"open", &QuoteBar::open},
      {"high", &QuoteBar::high},           {"low", &QuoteBar::low},
      {"pre_close", &QuoteBar::pre_close}, {"change", &QuoteBar::change},
      {"pct_chg", &QuoteBar::pct_chg},     {"vol", &QuoteBar::vol},
      {"amount", &QuoteBar::amount},
  };
  std::size_t cols[std::size(fields)];
  for (std::size_t i = 0; i < std::size(fields); ++i) {
    auto c = table.column({fields[i].name});
    if (!c) throw ParseError(table.header_line, "quote file missing column `" + std::string(fields[i].name) + "`");
    cols[i] = *c;
  }

  for (const auto& row : table.rows) {
    if (row.fields.size() != table.header.size()) throw ParseError(row.line, "wrong column count");
    QuoteBar bar;
    auto d = parse_compact_date(row.fields[*date_col]);
    if (!d) throw ParseError(row.line, "bad date `" + row.fields[*date_col] + "` (want YYYYMMDD)");
    bar.date = *d;
    for (std::size_t i = 0; i < std::size(fields); ++i) {
      auto v = delimited::parse_double(row.fields[cols[i]]);
      if (!v) {
        throw ParseError(row.line, "bad number `" + row.fields[cols[i]] + "` in column " +
                                       std::string(fields[i].name));
      }
      bar.*fields[i].member = *v;
    }
    if (bar.vol < 0.0 || bar.amount < 0.0) throw ParseError(row.line, "negative vol or amount");
    for (double QuoteBar::*p : {&QuoteBar::close, &QuoteBar::open, &QuoteBar::high, &QuoteBar::low,
                                &QuoteBar::pre_close}) {
      if (!(bar.*p > 0.0)) throw ParseError(row.line, "non-positive price");
    }
    result.bars.push_back(bar);
  }

  std::stable_sort(result.bars.begin(), result.bars.end(),
                   [](const QuoteBar& a, const QuoteBar& b) { return a.date < b.date; });
  for (std::size_t i = 1; i < result.bars.size(); ++i) {
    if (result.bars[i - 1].date == result.bars[i].date) {
      throw Error(Errc::duplicate_date, "quote file has two rows for " + to_compact(result.bars[i].date));
    }
  }
  for (const auto& b : result.bars) {
    auto w = check_bar(b);
    result.warnings.insert(result.warnings.end(), w.begin(), w.end());
  }
  return result;
}

inline void write_quotes(std::ostream& out, std::span<const QuoteBar> bars, char delimiter = '\t') {
  using delimited::format_double;
  delimited::write_row(
      out, {"date", "close", "open", "high", "low", "pre_close", "change", "pct_chg", "vol", "amount"},
      delimiter);
  for (const auto& b : bars) {
    delimited::write_row(out,
                         {to_compact(b.date), format_double(b.close), format_double(b.open),
                          format_double(b.high), format_double(b.low), format_double(b.pre_close),
                          format_double(b.change), format_double(b.pct_chg), format_double(b.vol),
                          format_double(b.amount)},
                         delimiter);
  }
}

enum class Field { close, open, high, low, vol, amount };

inline std::optional<Field> parse_field(std::string_view name) {
  if (name == "close") return Field::close;
  if (name == "open") return Field::open;
  if (name == "high") return Field::high;
  if (name == "low") return Field::low;
  if (name == "vol") return Field::vol;
  if (name == "amount") return Field::amount;
  return std::nullopt;
}

inline TimeSeries quote_series(std::span<const QuoteBar> bars, Field field) {
  if (bars.empty()) throw Error(Errc::empty_input, "quote_series: no bars");
  std::vector<Date> dates;
  std::vector<double> values;
  for (const auto& b : bars) {
    dates.push_back(b.date);
    switch (field) {
      case Field::close: values.push_back(b.close); break;
      case Field::open: values.push_back(b.open); break;
      case Field::high: values.push_back(b.high); break;
      case Field::low: values.push_back(b.low); break;
      case Field::vol: values.push_back(b.vol); break;
      case Field::amount: values.push_back(b.amount); break;
    }
  }
  return TimeSeries(std::move(dates), std::move(values));
}

/// Min-max scaling onto [0, 1] using the whole sample's extremes.
inline TimeSeries min_max_normalize(const TimeSeries& series) {
  if (series.size() < 2) throw Error(Errc::degenerate_range, "min_max_normalize: fewer than 2 points");
  const auto v = series.values();
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  const double min = *lo;
  const double range = *hi - *lo;
  if (!(range > 0.0)) throw Error(Errc::degenerate_range, "min_max_normalize: constant series");
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [&](double x) { return (x - min) / range; });
  return TimeSeries({series.dates().begin(), series.dates().end()}, std::move(out));
}

}  // namespace sentimic::market
