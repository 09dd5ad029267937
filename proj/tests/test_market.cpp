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

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "sentimic/market.hpp"
#include "test_support.hpp"

namespace {

using namespace sentimic;
using namespace sentimic::market;
using sentimic::testing::ymd;

QuoteLoad sample_quotes() {
  std::ifstream in(sentimic::testing::data_path("sample_quotes.tsv"));
  return load_quotes(in);
}

TimeSeries series_of(std::vector<double> v) {
  std::vector<Date> d;
  for (std::size_t i = 0; i < v.size(); ++i) {
    d.push_back(std::chrono::sys_days{ymd(2020, 1, 1)} + std::chrono::days{static_cast<int>(i)});
  }
  return TimeSeries(std::move(d), std::move(v));
}

TEST(Quotes, SampleFixtureLoadsAscending) {
  const auto q = sample_quotes();
  ASSERT_EQ(q.bars.size(), 5u);
  EXPECT_EQ(q.bars.front().date, ymd(2020, 12, 25));
  EXPECT_EQ(q.bars.back().date, ymd(2020, 12, 31));
  EXPECT_DOUBLE_EQ(q.bars.back().close, 14470.68);
  EXPECT_DOUBLE_EQ(q.bars.back().vol, 3.72e8);
  // Each change agrees with close - pre_close to within a cent.
  EXPECT_TRUE(q.warnings.empty());
}

TEST(Quotes, InconsistentBarsWarnButLoad) {
  std::istringstream in(
      "date\tclose\topen\thigh\tlow\tpre_close\tchange\tpct_chg\tvol\tamount\n"
      "20200102\t10\t9\t9.5\t9.6\t9\t5\t1\t1\t1\n");
  const auto q = load_quotes(in);
  ASSERT_EQ(q.bars.size(), 1u);
  EXPECT_EQ(q.warnings.size(), 3u);  // low too high, high too low, change off
}

TEST(Quotes, ColumnsInAnyOrderWithAlias) {
  std::istringstream in(
      "amount\tvol\tpct_chg\tchange\tpre_close\tlow\thigh\topen\tclose\ttrade_date\n"
      "1\t2\t0\t0\t10\t9\t11\t10\t10\t20200103\n");
  const auto q = load_quotes(in);
  ASSERT_EQ(q.bars.size(), 1u);
  EXPECT_EQ(q.bars[0].date, ymd(2020, 1, 3));
  EXPECT_EQ(q.bars[0].amount, 1.0);
  EXPECT_EQ(q.bars[0].vol, 2.0);
}

TEST(Quotes, RejectsBadRows) {
  const std::string header = "date\tclose\topen\thigh\tlow\tpre_close\tchange\tpct_chg\tvol\tamount\n";
  for (const char* row : {"2020-01-02\t1\t1\t1\t1\t1\t0\t0\t1\t1\n", "20200102\t0\t1\t1\t1\t1\t0\t0\t1\t1\n",
                          "20200102\t1\t1\t1\t1\t1\t0\t0\t-1\t1\n", "20200102\tx\t1\t1\t1\t1\t0\t0\t1\t1\n",
                          "20200102\t1\t1\n"}) {
    std::istringstream in(header + row);
    EXPECT_THROW(load_quotes(in), ParseError) << row;
  }
  std::istringstream in(header + "20200102\t1\t1\t1\t1\t1\t0\t0\t1\t1\n20200102\t1\t1\t1\t1\t1\t0\t0\t1\t1\n");
  try {
    load_quotes(in);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::duplicate_date);
  }
}

TEST(Quotes, RoundTrip) {
  const auto q = sample_quotes();
  std::stringstream ss;
  write_quotes(ss, q.bars);
  EXPECT_EQ(load_quotes(ss).bars, q.bars);
}

TEST(Quotes, FieldSelection) {
  const auto q = sample_quotes();
  EXPECT_EQ(parse_field("high"), Field::high);
  EXPECT_FALSE(parse_field("pre_close"));
  const auto s = quote_series(q.bars, Field::open);
  EXPECT_DOUBLE_EQ(s.values().back(), 14226.28);
}

TEST(Normalize, SmallExample) {
  const auto s = min_max_normalize(series_of({1, 2, 3}));
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.values()[0], 0.0);
  EXPECT_EQ(s.values()[1], 0.5);
  EXPECT_EQ(s.values()[2], 1.0);
}

TEST(Normalize, SampleCloseMaximumMapsToOne) {
  const auto q = sample_quotes();
  const auto s = min_max_normalize(quote_series(q.bars, Field::close));
  EXPECT_EQ(s.values().back(), 1.0);   // 20201231 is the sample maximum
  EXPECT_EQ(s.values()[2], 0.0);       // 20201229 is the sample minimum
  // (14017.06 - 13970.21) / (14470.68 - 13970.21)
  EXPECT_NEAR(s.values()[0], 46.85 / 500.47, 1e-12);
}

TEST(Normalize, AffineInvariantAndBounded) {
  std::mt19937_64 g(8);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v(2 + g() % 50);
    for (auto& x : v) x = 100.0 * sentimic::testing::uniform(g) - 50.0;
    const double a = 0.01 + 100.0 * sentimic::testing::uniform(g);
    const double b = 1000.0 * sentimic::testing::uniform(g) - 500.0;
    std::vector<double> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = a * v[i] + b;
    const auto nv = min_max_normalize(series_of(v));
    const auto nw = min_max_normalize(series_of(w));
    for (std::size_t i = 0; i < v.size(); ++i) {
      EXPECT_NEAR(nv.values()[i], nw.values()[i], 1e-12);
      EXPECT_GE(nv.values()[i], 0.0);
      EXPECT_LE(nv.values()[i], 1.0);
    }
  }
}

TEST(Normalize, DegenerateInputsRejected) {
  for (auto v : {std::vector<double>{4, 4, 4}, std::vector<double>{4}}) {
    try {
      min_max_normalize(series_of(v));
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::degenerate_range);
    }
  }
}

}  // namespace
