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
#include <chrono>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sentimic/date.hpp"
#include "sentimic/delimited.hpp"
#include "sentimic/error.hpp"
#include "sentimic/numeric.hpp"
#include "sentimic/series.hpp"

namespace sentimic::sentiment {

/// Class labels as written in scored-comment files.
enum class Label : int { negative = 0, neutral = 1, positive = 2 };

struct SentimentScore {
  Label label = Label::neutral;
  double p_pos = 0.5;
  double p_neg = 0.5;

  friend bool operator==(const SentimentScore&, const SentimentScore&) = default;
};

// Scorers print six significant digits, so a valid pair may sum to 1 + 5e-7.
inline constexpr double kProbabilitySlack = 1e-6;

/// Empty when `s` is a valid score, else a description of the violation.
inline std::optional<std::string> check_score(const SentimentScore& s) {
  if (!(s.p_pos >= 0.0 && s.p_pos <= 1.0)) return "positive probability outside [0, 1]";
  if (!(s.p_neg >= 0.0 && s.p_neg <= 1.0)) return "negative probability outside [0, 1]";
  if (s.p_pos + s.p_neg > 1.0 + kProbabilitySlack) return "probabilities sum above 1";
  if (s.label == Label::positive && s.p_pos < s.p_neg) return "POSITIVE label with p_pos < p_neg";
  if (s.label == Label::negative && s.p_neg < s.p_pos) return "NEGATIVE label with p_neg < p_pos";
  return std::nullopt;
}

struct ScoredComment {
  Date date;
  std::string text;
  SentimentScore score;

  friend bool operator==(const ScoredComment&, const ScoredComment&) = default;
};

struct DailySentiment {
  Date date;
  double emotions = 0.0;  // in [-1, 1]
  std::size_t n = 0;      // comments aggregated
};

/// Disjoint sets of positive and negative terms.
class Lexicon {
 public:
  Lexicon() = default;

  Lexicon(std::set<std::string> positive, std::set<std::string> negative)
      : positive_(std::move(positive)), negative_(std::move(negative)) {
    for (const auto* terms : {&positive_, &negative_}) {
      if (terms->contains(std::string{})) throw Error(Errc::invalid_data, "lexicon contains an empty term");
    }
    for (const auto& t : positive_) {
      if (negative_.contains(t)) throw Error(Errc::invalid_data, "lexicon term in both sections: " + t);
    }
  }

  const std::set<std::string>& positive() const noexcept { return positive_; }
  const std::set<std::string>& negative() const noexcept { return negative_; }
  bool empty() const noexcept { return positive_.empty() && negative_.empty(); }

 private:
  std::set<std::string> positive_;
  std::set<std::string> negative_;
};

/// Lexicon file: `[positive]` and `[negative]` section headers, one term per
/// line. Blank lines and lines starting with `#` are ignored.
inline Lexicon load_lexicon(std::istream& in) {
  std::set<std::string> pos, neg;
  std::set<std::string>* section = nullptr;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (number == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    auto t = delimited::trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (t == "[positive]") {
      section = &pos;
    } else if (t == "[negative]") {
      section = &neg;
    } else if (section == nullptr) {
      throw ParseError(number, "lexicon term before any [positive]/[negative] section");
    } else {
      section->emplace(t);
    }
  }
  return Lexicon(std::move(pos), std::move(neg));
}

/// Fallback dictionary scorer. Each distinct lexicon term found in `text` as
/// a substring counts once; probabilities are Laplace-smoothed hit shares.
inline SentimentScore lexicon_score(std::string_view text, const Lexicon& lexicon) {
  if (lexicon.empty()) throw Error(Errc::invalid_argument, "lexicon_score: empty lexicon");
  auto hits = [text](const std::set<std::string>& terms) {
    return static_cast<double>(std::count_if(terms.begin(), terms.end(), [text](const std::string& t) {
      return text.find(t) != std::string_view::npos;
    }));
  };
  const double npos = hits(lexicon.positive());
  const double nneg = hits(lexicon.negative());
  SentimentScore s;
  s.p_pos = (npos + 1.0) / (npos + nneg + 2.0);
  s.p_neg = (nneg + 1.0) / (npos + nneg + 2.0);
  s.label = npos > nneg ? Label::positive : npos < nneg ? Label::negative : Label::neutral;
  return s;
}

/// Per-comment sentiment: P(positive) - P(negative).
inline double comment_sentiment(const SentimentScore& s) { return s.p_pos - s.p_neg; }

/// Mean comment sentiment of one day. The sum is exact, so the value does
/// not depend on comment order.
inline DailySentiment daily_index(std::span<const ScoredComment> day_scores, const Date& date) {
  if (day_scores.empty()) throw Error(Errc::empty_input, "daily_index: no comments for " + to_iso(date));
  std::vector<double> values;
  values.reserve(day_scores.size());
  for (const auto& c : day_scores) {
    if (c.date != date) {
      throw Error(Errc::invalid_argument,
                  "daily_index: comment dated " + to_iso(c.date) + " in batch for " + to_iso(date));
    }
    values.push_back(comment_sentiment(c.score));
  }
  return {date, std::clamp(numeric::exact_mean(values), -1.0, 1.0), day_scores.size()};
}

struct DayScores {
  Date date;
  std::vector<ScoredComment> comments;
};

/// One index value per batch. Batch dates must be strictly increasing.
inline TimeSeries sentiment_series(std::span<const DayScores> batches) {
  std::vector<Date> dates;
  std::vector<double> values;
  for (const auto& b : batches) {
    if (!dates.empty() && !(dates.back() < b.date)) {
      throw Error(dates.back() == b.date ? Errc::duplicate_date : Errc::invalid_argument,
                  "sentiment_series: dates not strictly increasing at " + to_iso(b.date));
    }
    dates.push_back(b.date);
    values.push_back(daily_index(b.comments, b.date).emotions);
  }
  return TimeSeries(std::move(dates), std::move(values));
}

/// Groups scored comments by date, ascending, keeping file order within a day.
inline std::vector<DayScores> group_by_day(std::span<const ScoredComment> scores) {
  std::map<int, DayScores> by_day;
  for (const auto& c : scores) {
    auto [it, _] = by_day.try_emplace(std::chrono::sys_days(c.date).time_since_epoch().count(),
                                      DayScores{c.date, {}});
    it->second.comments.push_back(c);
  }
  std::vector<DayScores> out;
  out.reserve(by_day.size());
  for (auto& [_, d] : by_day) out.push_back(std::move(d));
  return out;
}

inline std::vector<DailySentiment> daily_indices(std::span<const DayScores> batches) {
  std::vector<DailySentiment> out;
  out.reserve(batches.size());
  for (const auto& b : batches) out.push_back(daily_index(b.comments, b.date));
  return out;
}

// ---------------------------------------------------------------------------
// Scored-comment file: `date, text, sentiment, positive_pro, negative_pro`.

inline std::vector<ScoredComment> load_scores(std::istream& in, char delimiter = '\t') {
  auto table = delimited::read(in, delimiter);
  std::vector<ScoredComment> out;
  if (table.header_line == 0) return out;
  const auto date_col = table.column({"date"});
  const auto text_col = table.column({"text", "reviews", "review"});
  const auto label_col = table.column({"sentiment"});
  const auto pos_col = table.column({"positive_pro"});
  const auto neg_col = table.column({"negative_pro"});
  if (!date_col || !text_col || !label_col || !pos_col || !neg_col) {
    throw ParseError(table.header_line,
                     "scored file needs `date, text, sentiment, positive_pro, negative_pro` columns");
  }
  for (const auto& row : table.rows) {
    if (row.fields.size() != table.header.size()) throw ParseError(row.line, "wrong column count");
    auto d = parse_iso_date(row.fields[*date_col]);
    if (!d) throw ParseError(row.line, "bad date `" + row.fields[*date_col] + "`");
    auto label = delimited::parse_int(row.fields[*label_col]);
    if (!label || *label < 0 || *label > 2) {
      throw ParseError(row.line, "sentiment label must be 0, 1 or 2, got `" + row.fields[*label_col] + "`");
    }
    auto p_pos = delimited::parse_double(row.fields[*pos_col]);
    auto p_neg = delimited::parse_double(row.fields[*neg_col]);
    if (!p_pos || !p_neg) throw ParseError(row.line, "bad probability value");
    SentimentScore score{static_cast<Label>(*label), *p_pos, *p_neg};
    if (auto problem = check_score(score)) throw ParseError(row.line, *problem);
    out.push_back({*d, row.fields[*text_col], score});
  }
  return out;
}

inline void write_scores(std::ostream& out, std::span<const ScoredComment> scores, char delimiter = '\t') {
  delimited::write_row(out, {"date", "text", "sentiment", "positive_pro", "negative_pro"}, delimiter);
  for (const auto& c : scores) {
    delimited::write_row(out,
                         {to_iso(c.date), c.text, std::to_string(static_cast<int>(c.score.label)),
                          delimited::format_double(c.score.p_pos), delimited::format_double(c.score.p_neg)},
                         delimiter);
  }
}

/// Index file: a series file with an extra `n` column.
inline void write_daily(std::ostream& out, std::span<const DailySentiment> days, char delimiter = '\t') {
  delimited::write_row(out, {"date", "value", "n"}, delimiter);
  for (const auto& d : days) {
    delimited::write_row(out, {to_iso(d.date), delimited::format_double(d.emotions), std::to_string(d.n)},
                         delimiter);
  }
}

inline TimeSeries to_series(std::span<const DailySentiment> days) {
  std::vector<Date> dates;
  std::vector<double> values;
  for (const auto& d : days) {
    dates.push_back(d.date);
    values.push_back(d.emotions);
  }
  return TimeSeries(std::move(dates), std::move(values));
}

}  // namespace sentimic::sentiment
