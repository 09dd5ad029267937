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
#include <limits>
#include <vector>

#include "sentimic/error.hpp"
#include "sentimic/series.hpp"

namespace sentimic::timeseries {

inline constexpr std::size_t kDefaultWindow = 30;
inline constexpr std::size_t kDefaultMinPeriods = 1;

/// Trailing mean over the last `window` observations (index-based, dates
/// are not consulted). Positions with fewer than `min_periods` observations
/// are omitted from the output; with min_periods = 1 none are.
///
/// The mean is taken relative to the window's first value, so a constant
/// window reproduces its value exactly, and it is clamped to the window's
/// range.
inline TimeSeries rolling_mean(const TimeSeries& series, std::size_t window = kDefaultWindow,
                               std::size_t min_periods = kDefaultMinPeriods) {
  if (window == 0) throw Error(Errc::invalid_argument, "rolling_mean: window must be positive");
  if (min_periods == 0 || min_periods > window) {
    throw Error(Errc::invalid_argument, "rolling_mean: need 1 <= min_periods <= window");
  }
  const auto v = series.values();
  std::vector<Date> dates;
  std::vector<double> out;
  dates.reserve(v.size());
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::size_t begin = i + 1 >= window ? i + 1 - window : 0;
    const std::size_t count = i + 1 - begin;
    if (count < min_periods) continue;
    const double base = v[begin];
    double delta = 0.0;
    double lo = base, hi = base;
    for (std::size_t j = begin; j <= i; ++j) {
      delta += v[j] - base;
      lo = std::min(lo, v[j]);
      hi = std::max(hi, v[j]);
    }
    dates.push_back(series.dates()[i]);
    out.push_back(std::clamp(base + delta / static_cast<double>(count), lo, hi));
  }
  return TimeSeries(std::move(dates), std::move(out));
}

/// Inner join on equal dates: x from `a`, y from `b`.
inline PairedSeries align(const TimeSeries& a, const TimeSeries& b) {
  std::vector<Date> dates;
  std::vector<double> x, y;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a.dates()[i] < b.dates()[j]) {
      ++i;
    } else if (b.dates()[j] < a.dates()[i]) {
      ++j;
    } else {
      dates.push_back(a.dates()[i]);
      x.push_back(a.values()[i++]);
      y.push_back(b.values()[j++]);
    }
  }
  if (dates.empty()) throw Error(Errc::no_overlap, "align: series share no dates");
  return PairedSeries(std::move(dates), std::move(x), std::move(y));
}

}  // namespace sentimic::timeseries
