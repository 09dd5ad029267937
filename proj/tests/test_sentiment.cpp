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

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "sentimic/sentiment.hpp"
#include "test_support.hpp"

namespace {

using namespace sentimic;
using namespace sentimic::sentiment;
using sentimic::testing::ymd;

std::vector<ScoredComment> sample_scores() {
  std::ifstream in(sentimic::testing::data_path("sample_scores.tsv"));
  return load_scores(in);
}

ScoredComment scored(Date d, double p_pos, double p_neg) {
  const Label l = p_pos > p_neg ? Label::positive : p_pos < p_neg ? Label::negative : Label::neutral;
  return {d, "t", {l, p_pos, p_neg}};
}

TEST(CommentSentiment, SampleRows) {
  const auto rows = sample_scores();
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].score.label, Label::positive);
  EXPECT_EQ(rows[1].score.label, Label::negative);
  // Hand arithmetic: 0.938666 - 0.0613335, 0.00298048 - 0.99702, 0.0382706 - 0.961729.
  EXPECT_NEAR(comment_sentiment(rows[0].score), 0.8773325, 1e-9);
  EXPECT_NEAR(comment_sentiment(rows[1].score), -0.99403952, 1e-9);
  EXPECT_NEAR(comment_sentiment(rows[2].score), -0.9234584, 1e-9);
}

TEST(DailyIndex, SampleDayMean) {
  const auto rows = sample_scores();
  const auto day = daily_index(rows, ymd(2020, 6, 9));
  // (0.8773325 - 0.99403952 - 0.9234584) / 3
  EXPECT_NEAR(day.emotions, -1.04016542 / 3.0, 1e-12);
  EXPECT_NEAR(day.emotions, -0.34672, 1e-5);
  EXPECT_EQ(day.n, 3u);
}

TEST(DailyIndex, NeutralCommentsCountTowardTheMean) {
  const std::vector<ScoredComment> day = {scored(ymd(2020, 1, 2), 0.9, 0.1), scored(ymd(2020, 1, 2), 0.5, 0.5)};
  EXPECT_DOUBLE_EQ(daily_index(day, ymd(2020, 1, 2)).emotions, 0.4);
}

TEST(DailyIndex, BoundedAndOrderFree) {
  std::mt19937_64 g(21);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ScoredComment> day;
    const auto n = 1 + g() % 60;
    for (std::size_t i = 0; i < n; ++i) {
      const double p = sentimic::testing::uniform(g);
      const double q = (1.0 - p) * sentimic::testing::uniform(g);
      day.push_back(scored(ymd(2020, 1, 2), p, q));
    }
    const double v = daily_index(day, ymd(2020, 1, 2)).emotions;
    EXPECT_GE(v, -1.0);
    EXPECT_LE(v, 1.0);
    std::shuffle(day.begin(), day.end(), g);
    EXPECT_EQ(daily_index(day, ymd(2020, 1, 2)).emotions, v);

    // Swapping every p_pos/p_neg pair negates the day exactly.
    for (auto& c : day) std::swap(c.score.p_pos, c.score.p_neg);
    EXPECT_EQ(daily_index(day, ymd(2020, 1, 2)).emotions, -v);
  }
}

TEST(DailyIndex, ExtremesReachTheBounds) {
  const std::vector<ScoredComment> pos = {scored(ymd(2020, 1, 2), 1.0, 0.0), scored(ymd(2020, 1, 2), 1.0, 0.0)};
  EXPECT_EQ(daily_index(pos, ymd(2020, 1, 2)).emotions, 1.0);
  const std::vector<ScoredComment> neg = {scored(ymd(2020, 1, 2), 0.0, 1.0)};
  EXPECT_EQ(daily_index(neg, ymd(2020, 1, 2)).emotions, -1.0);
}

TEST(DailyIndex, EmptyAndMismatchedDaysFail) {
  const std::vector<ScoredComment> none;
  EXPECT_THROW(daily_index(none, ymd(2020, 1, 2)), Error);
  const std::vector<ScoredComment> other = {scored(ymd(2020, 1, 3), 0.5, 0.5)};
  EXPECT_THROW(daily_index(other, ymd(2020, 1, 2)), Error);
}

TEST(Series, ThreeDaysMatchPerDayIndex) {
  std::vector<DayScores> days;
  for (unsigned d = 2; d <= 4; ++d) {
    days.push_back({ymd(2020, 1, d), {scored(ymd(2020, 1, d), 0.1 * d, 0.05), scored(ymd(2020, 1, d), 0.2, 0.7)}});
  }
  const auto s = sentiment_series(days);
  ASSERT_EQ(s.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(s.values()[i], daily_index(days[i].comments, days[i].date).emotions);
    EXPECT_EQ(s.dates()[i], days[i].date);
  }
}

TEST(Series, RejectsRepeatedOrDescendingDates) {
  std::vector<DayScores> days = {{ymd(2020, 1, 2), {scored(ymd(2020, 1, 2), 0.5, 0.5)}},
                                 {ymd(2020, 1, 2), {scored(ymd(2020, 1, 2), 0.5, 0.5)}}};
  try {
    sentiment_series(days);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::duplicate_date);
  }
  days[1].date = ymd(2020, 1, 1);
  days[1].comments[0].date = days[1].date;
  EXPECT_THROW(sentiment_series(days), Error);
}

TEST(Grouping, MergesScatteredRowsOfTheSameDay) {
  const std::vector<ScoredComment> rows = {scored(ymd(2020, 1, 3), 0.9, 0.1), scored(ymd(2020, 1, 2), 0.2, 0.7),
                                           scored(ymd(2020, 1, 3), 0.4, 0.5)};
  const auto days = group_by_day(rows);
  ASSERT_EQ(days.size(), 2u);
  EXPECT_EQ(days[0].date, ymd(2020, 1, 2));
  ASSERT_EQ(days[1].comments.size(), 2u);
  EXPECT_EQ(days[1].comments[0].score.p_pos, 0.9);
}

TEST(ScoresFile, RoundTripsAndValidates) {
  const auto rows = sample_scores();
  std::stringstream ss;
  write_scores(ss, rows);
  EXPECT_EQ(load_scores(ss), rows);

  std::istringstream bad_label("date\ttext\tsentiment\tpositive_pro\tnegative_pro\n2020-01-02\tx\t3\t0.5\t0.5\n");
  EXPECT_THROW(load_scores(bad_label), ParseError);
  std::istringstream bad_sum("date\ttext\tsentiment\tpositive_pro\tnegative_pro\n2020-01-02\tx\t2\t0.8\t0.5\n");
  EXPECT_THROW(load_scores(bad_sum), ParseError);
  std::istringstream contradiction(
      "date\ttext\tsentiment\tpositive_pro\tnegative_pro\n2020-01-02\tx\t2\t0.1\t0.9\n");
  try {
    load_scores(contradiction);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  std::istringstream missing("date\ttext\tpositive_pro\n");
  EXPECT_THROW(load_scores(missing), ParseError);
}

TEST(CheckScore, ToleratesPrintRoundingOnly) {
  EXPECT_FALSE(check_score({Label::negative, 0.00298048, 0.99702}));
  EXPECT_TRUE(check_score({Label::negative, 0.01, 0.995}));
  EXPECT_TRUE(check_score({Label::positive, 1.2, 0.0}));
}

TEST(Lexicon, LoadsSectionsAndScores) {
  std::istringstream in("# demo\n[positive]\n涨\n利好\n\n[negative]\n跌\n");
  const auto lex = load_lexicon(in);
  EXPECT_EQ(lex.positive().size(), 2u);
  EXPECT_EQ(lex.negative().size(), 1u);

  const auto s = lexicon_score("利好，大涨", lex);  // two positive terms, no negative
  EXPECT_EQ(s.label, Label::positive);
  EXPECT_DOUBLE_EQ(s.p_pos, 3.0 / 4.0);
  EXPECT_DOUBLE_EQ(s.p_neg, 1.0 / 4.0);
  EXPECT_FALSE(check_score(s));

  const auto n = lexicon_score("无关", lex);
  EXPECT_EQ(n.label, Label::neutral);
  EXPECT_EQ(comment_sentiment(n), 0.0);
}

TEST(Lexicon, RejectsMalformedFiles) {
  std::istringstream orphan("涨\n[positive]\n");
  EXPECT_THROW(load_lexicon(orphan), ParseError);
  std::istringstream overlap("[positive]\n涨\n[negative]\n涨\n");
  EXPECT_THROW(load_lexicon(overlap), Error);
}

TEST(Lexicon, BundledLexiconScoresValidly) {
  std::ifstream in(sentimic::testing::repo_data_path("lexicon_zh.txt"));
  const auto lex = load_lexicon(in);
  EXPECT_FALSE(lex.empty());
  for (const auto& text : {"北上今天净流入 60 亿，尾盘猛进二十亿，明天大盘无忧！", "大跌正式开始"}) {
    EXPECT_FALSE(check_score(lexicon_score(text, lex)));
  }
  EXPECT_EQ(lexicon_score("大跌正式开始", lex).label, Label::negative);
  EXPECT_EQ(lexicon_score("明天大盘无忧！", lex).label, Label::positive);
}

}  // namespace
