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

// Forum-comment ingestion and preprocessing: parsing, markup/emoticon
// stripping, the length filter, exact deduplication, top-k by reads per day,
// and descriptive statistics over comment lengths.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sentimic/date.hpp"
#include "sentimic/delimited.hpp"
#include "sentimic/error.hpp"
#include "sentimic/numeric.hpp"
#include "sentimic/utf8.hpp"

namespace sentimic::corpus {

inline constexpr std::size_t kDefaultMaxChars = 150;
inline constexpr std::size_t kDefaultTopK = 50;

struct RawComment {
  Date date;
  std::string text;
  std::int64_t reads = 0;
  std::int64_t comment_count = 0;
  std::string source_url;
};

struct CleanComment {
  Date date;
  std::string text;
  std::size_t char_len = 0;  // Unicode scalar values
  std::int64_t reads = 0;
  std::int64_t comment_count = 0;
  std::string source_url;

  friend bool operator==(const CleanComment&, const CleanComment&) = default;
};

enum class DropReason { empty, too_long };

inline std::string_view to_string(DropReason r) {
  return r == DropReason::empty ? "EMPTY" : "TOO_LONG";
}

struct Dropped {
  DropReason reason;
};

using CleanResult = std::variant<CleanComment, Dropped>;

struct DailyBatch {
  Date date;
  std::vector<CleanComment> comments;  // reads descending, stable
};

struct LengthStats {
  double mean = 0.0;
  double sd = 0.0;
  double skewness = 0.0;
  std::size_t min = 0;
  std::size_t max = 0;
  std::size_t count = 0;
  std::optional<std::string> warning;  // set when sd/skewness are undefined and reported as 0
};

struct RejectedRow {
  std::size_t line;
  std::string reason;
};

struct ParseResult {
  std::vector<RawComment> comments;
  std::vector<RejectedRow> rejected;  // lenient mode only
  std::size_t rows_read = 0;
};

struct ParseOptions {
  char delimiter = '\t';
  bool strict = false;
};

// ---------------------------------------------------------------------------
// Parsing

/// Reads a comment file with header `date, text, reads, comments, source`.
/// `reviews` is accepted as an alias of `text`. The `comments` and `source`
/// columns may be absent. In strict mode the first malformed row throws a
/// ParseError; otherwise it is skipped and recorded in `rejected`.
inline ParseResult parse_comments(std::istream& in, const ParseOptions& opts = {}) {
  auto table = delimited::read(in, opts.delimiter);
  ParseResult result;
  if (table.header_line == 0) return result;

  const auto date_col = table.column({"date"});
  const auto text_col = table.column({"text", "reviews", "review"});
  const auto reads_col = table.column({"reads"});
  const auto count_col = table.column({"comments", "comment_count"});
  const auto source_col = table.column({"source", "source_url"});
  if (!date_col || !text_col || !reads_col) {
    throw ParseError(table.header_line, "comment file needs `date`, `text` and `reads` columns");
  }

  for (const auto& row : table.rows) {
    ++result.rows_read;
    std::string problem;
    RawComment c;
    if (row.fields.size() != table.header.size()) {
      problem = "expected " + std::to_string(table.header.size()) + " columns, found " +
                std::to_string(row.fields.size());
    } else if (auto d = parse_iso_date(row.fields[*date_col]); !d) {
      problem = "bad date `" + row.fields[*date_col] + "`";
    } else if (auto r = delimited::parse_int(row.fields[*reads_col]); !r || *r < 0) {
      problem = "bad reads `" + row.fields[*reads_col] + "`";
    } else if (!utf8::is_valid(row.fields[*text_col])) {
      problem = "text is not valid UTF-8";
    } else {
      c.date = *d;
      c.reads = *r;
      c.text = row.fields[*text_col];
      if (count_col) {
        const auto& field = row.fields[*count_col];
        auto n = field.empty() ? std::optional<std::int64_t>{0} : delimited::parse_int(field);
        if (!n || *n < 0) problem = "bad comment count `" + field + "`";
        else c.comment_count = *n;
      }
      if (source_col) c.source_url = row.fields[*source_col];
    }

    if (!problem.empty()) {
      if (opts.strict) throw ParseError(row.line, problem);
      result.rejected.push_back({row.line, problem});
      continue;
    }
    result.comments.push_back(std::move(c));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Cleaning

namespace detail {

// Removes every `open ... close` span, shortest match first. An opener with
// no closer after it is kept verbatim.
inline std::string strip_spans(std::string_view s, char open, char close) {
  std::string out;
  out.reserve(s.size());
  while (!s.empty()) {
    const auto b = s.find(open);
    if (b == std::string_view::npos) break;
    const auto e = s.find(close, b + 1);
    if (e == std::string_view::npos) break;
    out.append(s.substr(0, b));
    s.remove_prefix(e + 1);
  }
  out.append(s);
  return out;
}

inline std::string clean_pass(std::string_view text) {
  // Markup tags first, so `[` spans hidden inside tags go with them.
  auto s = strip_spans(text, '<', '>');
  s = strip_spans(s, '[', ']');
  return utf8::collapse_whitespace(s);
}

}  // namespace detail

/// Removes markup tags (`<...>`) and bracketed placeholders or emoticon codes
/// (`[...]`), then collapses and trims whitespace. Iterated to a
/// fixed point, so cleaning cleaned text is the identity.
inline std::string clean_text(std::string_view text) {
  std::string current(text);
  while (true) {
    auto next = detail::clean_pass(current);
    if (next == current) return current;
    current = std::move(next);
  }
}

inline CleanResult clean(const RawComment& raw, std::size_t max_chars = kDefaultMaxChars) {
  auto text = clean_text(raw.text);
  const auto len = utf8::length(text);
  if (len == 0) return Dropped{DropReason::empty};
  if (len >= max_chars) return Dropped{DropReason::too_long};
  return CleanComment{raw.date, std::move(text), len, raw.reads, raw.comment_count, raw.source_url};
}

// ---------------------------------------------------------------------------
// Deduplication and per-day selection

/// Keeps the first occurrence of each (date, text) pair, preserving order.
inline std::vector<CleanComment> dedupe(std::span<const CleanComment> comments) {
  std::set<std::pair<int, std::string_view>> seen;
  std::vector<CleanComment> out;
  out.reserve(comments.size());
  for (const auto& c : comments) {
    const int day = std::chrono::sys_days(c.date).time_since_epoch().count();
    if (seen.emplace(day, c.text).second) out.push_back(c);
  }
  return out;
}

/// The `k` most-read comments of `day`, reads descending; equal reads keep
/// their input order.
inline DailyBatch select_top(const Date& day, std::span<const CleanComment> comments,
                             std::size_t k = kDefaultTopK) {
  if (k == 0) throw Error(Errc::invalid_argument, "select_top: k must be positive");
  for (const auto& c : comments) {
    if (c.date != day) {
      throw Error(Errc::invalid_argument,
                  "select_top: comment dated " + to_iso(c.date) + " in batch for " + to_iso(day));
    }
  }
  DailyBatch batch{day, {comments.begin(), comments.end()}};
  std::stable_sort(batch.comments.begin(), batch.comments.end(),
                   [](const CleanComment& a, const CleanComment& b) { return a.reads > b.reads; });
  if (batch.comments.size() > k) batch.comments.resize(k);
  return batch;
}

/// Groups comments by date (ascending) and applies select_top to each day.
inline std::vector<DailyBatch> select_daily_top(std::span<const CleanComment> comments,
                                                std::size_t k = kDefaultTopK) {
  std::map<int, std::pair<Date, std::vector<CleanComment>>> by_day;
  for (const auto& c : comments) {
    auto& slot = by_day[std::chrono::sys_days(c.date).time_since_epoch().count()];
    slot.first = c.date;
    slot.second.push_back(c);
  }
  std::vector<DailyBatch> out;
  out.reserve(by_day.size());
  for (auto& [_, day] : by_day) out.push_back(select_top(day.first, day.second, k));
  return out;
}

// ---------------------------------------------------------------------------
// Statistics

/// Mean, sample standard deviation (n-1), adjusted Fisher-Pearson skewness,
/// min, max and count. Sums are exact, so the result does not depend on the
/// order of `lengths`.
inline LengthStats length_stats(std::span<const std::size_t> lengths) {
  if (lengths.empty()) throw Error(Errc::empty_input, "length_stats: no comments");
  const std::size_t n = lengths.size();
  std::vector<double> v(lengths.begin(), lengths.end());
  LengthStats s;
  s.count = n;
  s.min = *std::min_element(lengths.begin(), lengths.end());
  s.max = *std::max_element(lengths.begin(), lengths.end());
  s.mean = numeric::exact_mean(v);

  std::vector<double> d2(n), d3(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = v[i] - s.mean;
    d2[i] = d * d;
    d3[i] = d * d * d;
  }
  const double ss = numeric::exact_sum(d2);
  if (n < 2) {
    s.warning = "fewer than 2 comments: sd and skewness reported as 0";
    return s;
  }
  s.sd = std::sqrt(ss / static_cast<double>(n - 1));

  const double m2 = ss / static_cast<double>(n);
  const double m3 = numeric::exact_sum(d3) / static_cast<double>(n);
  if (n < 3) {
    s.warning = "fewer than 3 comments: skewness reported as 0";
  } else if (m2 > 0.0) {
    const double g1 = m3 / std::pow(m2, 1.5);
    const double nn = static_cast<double>(n);
    s.skewness = std::sqrt(nn * (nn - 1.0)) / (nn - 2.0) * g1;
  }
  return s;
}

inline LengthStats length_stats(std::span<const CleanComment> comments) {
  std::vector<std::size_t> lengths;
  lengths.reserve(comments.size());
  for (const auto& c : comments) lengths.push_back(c.char_len);
  return length_stats(lengths);
}

// ---------------------------------------------------------------------------
// Cleaned-comment file: the input schema plus `char_len`.

inline void write_cleaned(std::ostream& out, std::span<const CleanComment> comments,
                          char delimiter = '\t') {
  delimited::write_row(out, {"date", "text", "reads", "comments", "source", "char_len"}, delimiter);
  for (const auto& c : comments) {
    delimited::write_row(out,
                         {to_iso(c.date), c.text, std::to_string(c.reads),
                          std::to_string(c.comment_count), c.source_url, std::to_string(c.char_len)},
                         delimiter);
  }
}

/// Reads a cleaned-comment file. `char_len` is recomputed from the text.
inline std::vector<CleanComment> read_cleaned(std::istream& in, char delimiter = '\t') {
  auto parsed = parse_comments(in, {delimiter, true});
  std::vector<CleanComment> out;
  out.reserve(parsed.comments.size());
  for (auto& raw : parsed.comments) {
    const auto len = utf8::length(raw.text);
    if (len == 0) throw Error(Errc::invalid_data, "cleaned comment with empty text");
    out.push_back(CleanComment{raw.date, std::move(raw.text), len, raw.reads, raw.comment_count,
                               std::move(raw.source_url)});
  }
  return out;
}

inline void write_length_stats(std::ostream& out, const LengthStats& s, char delimiter = '\t') {
  delimited::write_row(out, {"mean", "sd", "skewness", "min", "max", "count"}, delimiter);
  delimited::write_row(out,
                       {delimited::format_double(s.mean), delimited::format_double(s.sd),
                        delimited::format_double(s.skewness), std::to_string(s.min),
                        std::to_string(s.max), std::to_string(s.count)},
                       delimiter);
}

}  // namespace sentimic::corpus
