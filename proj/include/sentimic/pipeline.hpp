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

// Stage orchestration behind the command-line tool. Every stage reads its
// inputs from files named in PipelineConfig (or the artifacts of an earlier
// stage in the output directory), writes its own artifacts, and records
// counts in a RunReport.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sentimic/corpus.hpp"
#include "sentimic/delimited.hpp"
#include "sentimic/error.hpp"
#include "sentimic/market.hpp"
#include "sentimic/mic.hpp"
#include "sentimic/sentiment.hpp"
#include "sentimic/series.hpp"
#include "sentimic/timeseries.hpp"

namespace sentimic::pipeline {

namespace fs = std::filesystem;

inline constexpr const char* kConfigEnv = "SENTIMIC_CONFIG";

// Artifact file names inside the output directory.
namespace files {
inline constexpr const char* cleaned = "cleaned_comments.tsv";
inline constexpr const char* length_stats = "length_stats.tsv";
inline constexpr const char* scored = "scored_comments.tsv";
inline constexpr const char* index = "sentiment_index.tsv";
inline constexpr const char* labels = "sentiment_labels.tsv";
inline constexpr const char* price = "price_series.tsv";
inline constexpr const char* price_normalized = "price_normalized.tsv";
inline constexpr const char* raw_pair = "raw_series.tsv";
inline constexpr const char* smoothed_pair = "smoothed_series.tsv";
inline constexpr const char* paired = "paired_series.tsv";
inline constexpr const char* mic_report = "mic_report.tsv";
inline constexpr const char* matrix = "characteristic_matrix.tsv";
inline constexpr const char* run_report = "run_report.txt";
inline constexpr const char* lock = ".sentimic.lock";
}  // namespace files

enum class ExitCode : int { ok = 0, usage = 2, data = 3, analysis = 4 };

inline ExitCode exit_code_for(Errc code) {
  switch (code) {
    case Errc::invalid_argument:
    case Errc::missing_input:
    case Errc::io_error:
    case Errc::locked:
      return ExitCode::usage;
    case Errc::parse_error:
    case Errc::invalid_data:
    case Errc::empty_input:
    case Errc::duplicate_date:
      return ExitCode::data;
    case Errc::degenerate_range:
    case Errc::too_few_points:
    case Errc::no_overlap:
    case Errc::oracle_limit:
      return ExitCode::analysis;
  }
  return ExitCode::data;
}

struct PipelineConfig {
  fs::path comments;   // raw comment file
  fs::path cleaned;    // cleaned-comment file (default: output artifact)
  fs::path scores;     // scored-comment file from an external scorer
  fs::path quotes;     // quote file
  fs::path lexicon;    // lexicon file for the built-in scorer
  fs::path sentiment;  // sentiment series (default: output artifact)
  fs::path paired;     // paired series, bypasses the series stages of `mic`
  fs::path output_dir = "sentimic_out";

  std::size_t top_k = corpus::kDefaultTopK;
  std::size_t max_chars = corpus::kDefaultMaxChars;
  std::size_t window = timeseries::kDefaultWindow;
  std::size_t min_periods = timeseries::kDefaultMinPeriods;
  bool normalize_before_smoothing = true;
  bool inclusive_b = false;
  bool strict_parse = false;
  char delimiter = '\t';
  market::Field price_field = market::Field::close;

  void validate() const {
    if (top_k < 1) throw Error(Errc::invalid_argument, "top_k must be >= 1");
    if (max_chars < 2) throw Error(Errc::invalid_argument, "max_chars must be >= 2");
    if (min_periods < 1 || min_periods > window) {
      throw Error(Errc::invalid_argument, "need 1 <= min_periods <= window");
    }
    if (delimiter == '\n' || delimiter == '\r') throw Error(Errc::invalid_argument, "bad delimiter");
  }
};

// ---------------------------------------------------------------------------
// Configuration file: `key = value` lines, `#` comments. Keys use `_` or `-`.
// Relative paths resolve against the config file's directory.

namespace detail {

inline std::string normalize_key(std::string_view key) {
  std::string k = delimited::lower_ascii(delimited::trim(key));
  for (auto& c : k) {
    if (c == '-') c = '_';
  }
  return k;
}

inline bool parse_bool(const std::string& key, std::string_view v) {
  const auto s = delimited::lower_ascii(v);
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw Error(Errc::invalid_argument, "config `" + key + "`: expected a boolean, got `" + std::string(v) + "`");
}

inline std::size_t parse_count(const std::string& key, std::string_view v) {
  auto n = delimited::parse_int(v);
  if (!n || *n < 0) {
    throw Error(Errc::invalid_argument, "config `" + key + "`: expected a non-negative integer, got `" +
                                            std::string(v) + "`");
  }
  return static_cast<std::size_t>(*n);
}

}  // namespace detail

inline char parse_delimiter(std::string_view v) {
  if (v == "tab" || v == "\\t" || v == "\t") return '\t';
  if (v.size() == 1) return v.front();
  throw Error(Errc::invalid_argument, "delimiter must be a single character or `tab`");
}

/// Applies one setting. Unknown keys are an error.
inline void apply_setting(PipelineConfig& cfg, std::string_view raw_key, std::string_view value,
                          const fs::path& base = {}) {
  const auto key = detail::normalize_key(raw_key);
  auto path = [&] {
    fs::path p{std::string(value)};
    return p.is_relative() && !base.empty() ? base / p : p;
  };
  if (key == "comments") cfg.comments = path();
  else if (key == "cleaned") cfg.cleaned = path();
  else if (key == "scores") cfg.scores = path();
  else if (key == "quotes") cfg.quotes = path();
  else if (key == "lexicon") cfg.lexicon = path();
  else if (key == "sentiment") cfg.sentiment = path();
  else if (key == "paired") cfg.paired = path();
  else if (key == "output" || key == "out" || key == "output_dir") cfg.output_dir = path();
  else if (key == "top_k") cfg.top_k = detail::parse_count(key, value);
  else if (key == "max_chars") cfg.max_chars = detail::parse_count(key, value);
  else if (key == "window") cfg.window = detail::parse_count(key, value);
  else if (key == "min_periods") cfg.min_periods = detail::parse_count(key, value);
  else if (key == "normalize_before_smoothing") cfg.normalize_before_smoothing = detail::parse_bool(key, value);
  else if (key == "inclusive_b") cfg.inclusive_b = detail::parse_bool(key, value);
  else if (key == "strict" || key == "strict_parse") cfg.strict_parse = detail::parse_bool(key, value);
  else if (key == "delimiter") cfg.delimiter = parse_delimiter(value);
  else if (key == "price_field") {
    auto f = market::parse_field(delimited::lower_ascii(value));
    if (!f) throw Error(Errc::invalid_argument, "unknown price field `" + std::string(value) + "`");
    cfg.price_field = *f;
  } else {
    throw Error(Errc::invalid_argument, "unknown config key `" + std::string(raw_key) + "`");
  }
}

inline void apply_config(PipelineConfig& cfg, std::istream& in, const fs::path& base = {}) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto t = delimited::trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string_view::npos) throw ParseError(number, "config line needs `key = value`");
    apply_setting(cfg, t.substr(0, eq), delimited::trim(t.substr(eq + 1)), base);
  }
}

inline void apply_config_file(PipelineConfig& cfg, const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::missing_input, "cannot open config file " + path.string());
  apply_config(cfg, in, path.parent_path());
}

// ---------------------------------------------------------------------------
// Run report

struct PreprocessCounts {
  std::size_t rows_read = 0;
  std::size_t malformed = 0;
  std::size_t dropped_empty = 0;
  std::size_t dropped_too_long = 0;
  std::size_t duplicates = 0;
  std::size_t beyond_top_k = 0;
  std::size_t kept = 0;
  std::size_t days = 0;

  std::size_t dropped() const {
    return malformed + dropped_empty + dropped_too_long + duplicates + beyond_top_k;
  }
  bool reconciles() const { return rows_read == kept + dropped(); }
};

struct IndexCounts {
  std::size_t scored_rows = 0;
  std::size_t days = 0;
};

struct QuoteCounts {
  std::size_t bars = 0;
  std::size_t warnings = 0;
};

struct MicSummary {
  std::size_t sentiment_points = 0;
  std::size_t price_points = 0;
  std::size_t paired_points = 0;
  double mic = 0.0;
  int best_x = 0;
  int best_y = 0;
  int b_of_n = 0;
};

struct RunReport {
  std::optional<PreprocessCounts> preprocess;
  std::optional<std::size_t> scored;  // rows scored by the lexicon stage
  std::optional<IndexCounts> index;
  std::optional<QuoteCounts> quotes;
  std::optional<MicSummary> mic;
  std::vector<std::string> warnings;
};

inline void write_run_report(std::ostream& out, const RunReport& r) {
  if (r.preprocess) {
    const auto& p = *r.preprocess;
    out << "[preprocess]\n"
        << "rows_read = " << p.rows_read << "\n"
        << "malformed = " << p.malformed << "\n"
        << "dropped_empty = " << p.dropped_empty << "\n"
        << "dropped_too_long = " << p.dropped_too_long << "\n"
        << "duplicates = " << p.duplicates << "\n"
        << "beyond_top_k = " << p.beyond_top_k << "\n"
        << "kept = " << p.kept << "\n"
        << "days = " << p.days << "\n";
  }
  if (r.scored) out << "[score-lexicon]\nscored = " << *r.scored << "\n";
  if (r.index) out << "[index]\nscored_rows = " << r.index->scored_rows << "\ndays = " << r.index->days << "\n";
  if (r.quotes) out << "[quotes]\nbars = " << r.quotes->bars << "\nwarnings = " << r.quotes->warnings << "\n";
  if (r.mic) {
    const auto& m = *r.mic;
    out << "[mic]\n"
        << "sentiment_points = " << m.sentiment_points << "\n"
        << "price_points = " << m.price_points << "\n"
        << "paired_points = " << m.paired_points << "\n"
        << "mic = " << delimited::format_double(m.mic) << "\n"
        << "best_x = " << m.best_x << "\n"
        << "best_y = " << m.best_y << "\n"
        << "b_of_n = " << m.b_of_n << "\n";
  }
  out << "[warnings]\n";
  for (const auto& w : r.warnings) out << w << "\n";
}

// ---------------------------------------------------------------------------
// File helpers

/// Exclusive lock on an output directory, released on destruction.
class OutputLock {
 public:
  explicit OutputLock(const fs::path& dir) : path_(dir / files::lock) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(Errc::io_error, "cannot create output directory " + dir.string());
    std::FILE* f = std::fopen(path_.c_str(), "wx");
    if (f == nullptr) {
      throw Error(Errc::locked, "output directory " + dir.string() + " is in use (remove " +
                                    path_.string() + " if no run is active)");
    }
    std::fclose(f);
  }
  OutputLock(const OutputLock&) = delete;
  OutputLock& operator=(const OutputLock&) = delete;
  ~OutputLock() {
    std::error_code ec;
    fs::remove(path_, ec);
  }

 private:
  fs::path path_;
};

inline std::ifstream open_input(const fs::path& path, std::string_view what) {
  if (path.empty()) throw Error(Errc::missing_input, "no " + std::string(what) + " file given");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::missing_input, "cannot open " + std::string(what) + " file " + path.string());
  return in;
}

template <class Writer>
void write_file(const fs::path& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_error, "cannot write " + path.string());
  writer(out);
  if (!out) throw Error(Errc::io_error, "write failed for " + path.string());
}

inline fs::path or_artifact(const fs::path& given, const PipelineConfig& cfg, const char* name) {
  return given.empty() ? cfg.output_dir / name : given;
}

// ---------------------------------------------------------------------------
// Stages

/// parse -> clean -> dedupe -> top-k per day. Writes the cleaned comments
/// and their length statistics.
inline std::vector<corpus::CleanComment> run_preprocess(const PipelineConfig& cfg, RunReport& report) {
  auto in = open_input(cfg.comments, "comment");
  auto parsed = corpus::parse_comments(in, {cfg.delimiter, cfg.strict_parse});
  if (parsed.rows_read == 0) {
    throw Error(Errc::empty_input, "comment file " + cfg.comments.string() + " has no data rows");
  }

  PreprocessCounts counts;
  counts.rows_read = parsed.rows_read;
  counts.malformed = parsed.rejected.size();
  for (const auto& r : parsed.rejected) {
    report.warnings.push_back("comments line " + std::to_string(r.line) + ": " + r.reason);
  }

  std::vector<corpus::CleanComment> cleaned;
  for (const auto& raw : parsed.comments) {
    auto result = corpus::clean(raw, cfg.max_chars);
    if (auto* c = std::get_if<corpus::CleanComment>(&result)) {
      cleaned.push_back(std::move(*c));
    } else if (std::get<corpus::Dropped>(result).reason == corpus::DropReason::empty) {
      ++counts.dropped_empty;
    } else {
      ++counts.dropped_too_long;
    }
  }
  auto unique = corpus::dedupe(cleaned);
  counts.duplicates = cleaned.size() - unique.size();

  std::vector<corpus::CleanComment> selected;
  for (auto& batch : corpus::select_daily_top(unique, cfg.top_k)) {
    ++counts.days;
    for (auto& c : batch.comments) selected.push_back(std::move(c));
  }
  counts.kept = selected.size();
  counts.beyond_top_k = unique.size() - selected.size();
  report.preprocess = counts;
  if (selected.empty()) throw Error(Errc::empty_input, "no comments survived preprocessing");

  const auto stats = corpus::length_stats(selected);
  if (stats.warning) report.warnings.push_back("length_stats: " + *stats.warning);
  write_file(cfg.output_dir / files::cleaned,
             [&](std::ostream& out) { corpus::write_cleaned(out, selected, cfg.delimiter); });
  write_file(cfg.output_dir / files::length_stats,
             [&](std::ostream& out) { corpus::write_length_stats(out, stats, cfg.delimiter); });
  return selected;
}

/// Scores cleaned comments with the lexicon scorer.
inline std::vector<sentiment::ScoredComment> run_score_lexicon(
    const PipelineConfig& cfg, RunReport& report,
    std::optional<std::vector<corpus::CleanComment>> cleaned = std::nullopt) {
  auto lex_in = open_input(cfg.lexicon, "lexicon");
  const auto lexicon = sentiment::load_lexicon(lex_in);
  if (lexicon.empty()) throw Error(Errc::invalid_data, "lexicon " + cfg.lexicon.string() + " has no terms");
  if (!cleaned) {
    auto in = open_input(or_artifact(cfg.cleaned, cfg, files::cleaned), "cleaned-comment");
    cleaned = corpus::read_cleaned(in, cfg.delimiter);
  }
  std::vector<sentiment::ScoredComment> scored;
  scored.reserve(cleaned->size());
  for (const auto& c : *cleaned) scored.push_back({c.date, c.text, sentiment::lexicon_score(c.text, lexicon)});
  report.scored = scored.size();
  write_file(cfg.output_dir / files::scored,
             [&](std::ostream& out) { sentiment::write_scores(out, scored, cfg.delimiter); });
  return scored;
}

/// Daily sentiment index. Rows sharing a date form one day.
inline TimeSeries run_index(const PipelineConfig& cfg, RunReport& report,
                            std::optional<std::vector<sentiment::ScoredComment>> scores = std::nullopt) {
  if (!scores) {
    auto in = open_input(or_artifact(cfg.scores, cfg, files::scored), "scored-comment");
    scores = sentiment::load_scores(in, cfg.delimiter);
  }
  if (scores->empty()) throw Error(Errc::empty_input, "no scored comments");
  const auto days = sentiment::group_by_day(*scores);
  const auto daily = sentiment::daily_indices(days);
  report.index = IndexCounts{scores->size(), daily.size()};

  write_file(cfg.output_dir / files::index,
             [&](std::ostream& out) { sentiment::write_daily(out, daily, cfg.delimiter); });
  write_file(cfg.output_dir / files::labels, [&](std::ostream& out) {
    delimited::write_row(out, {"date", "negative", "neutral", "positive"}, cfg.delimiter);
    for (const auto& d : days) {
      std::size_t count[3] = {0, 0, 0};
      for (const auto& c : d.comments) ++count[static_cast<int>(c.score.label)];
      delimited::write_row(out, {to_iso(d.date), std::to_string(count[0]), std::to_string(count[1]),
                                 std::to_string(count[2])},
                           cfg.delimiter);
    }
  });
  return sentiment::to_series(daily);
}

/// Loads quotes and extracts the configured price field.
inline TimeSeries run_quotes(const PipelineConfig& cfg, RunReport& report) {
  auto in = open_input(cfg.quotes, "quote");
  const auto loaded = market::load_quotes(in, cfg.delimiter);
  if (loaded.bars.empty()) throw Error(Errc::empty_input, "quote file " + cfg.quotes.string() + " has no rows");
  report.quotes = QuoteCounts{loaded.bars.size(), loaded.warnings.size()};
  for (const auto& w : loaded.warnings) report.warnings.push_back("quotes " + to_compact(w.date) + ": " + w.message);

  auto price = market::quote_series(loaded.bars, cfg.price_field);
  write_file(cfg.output_dir / files::price, [&](std::ostream& out) { write_series(out, price, cfg.delimiter); });
  if (price.size() >= 2) {
    try {
      const auto normalized = market::min_max_normalize(price);
      write_file(cfg.output_dir / files::price_normalized,
                 [&](std::ostream& out) { write_series(out, normalized, cfg.delimiter); });
    } catch (const Error& e) {
      if (e.code() != Errc::degenerate_range) throw;
      report.warnings.push_back("quotes: price series is constant, not normalized");
    }
  }
  return price;
}

/// Series preparation for one side: min-max normalisation and the rolling
/// mean, in the configured order.
inline TimeSeries prepare_series(const TimeSeries& s, const PipelineConfig& cfg) {
  if (cfg.normalize_before_smoothing) {
    return timeseries::rolling_mean(market::min_max_normalize(s), cfg.window, cfg.min_periods);
  }
  return market::min_max_normalize(timeseries::rolling_mean(s, cfg.window, cfg.min_periods));
}

/// normalise -> smooth -> align -> MIC, or MIC of a given paired file.
inline mic::MicResult run_mic(const PipelineConfig& cfg, RunReport& report,
                              std::optional<TimeSeries> sentiment_series = std::nullopt,
                              std::optional<TimeSeries> price_series = std::nullopt) {
  MicSummary summary;
  PairedSeries pairs;
  if (!cfg.paired.empty()) {
    auto in = open_input(cfg.paired, "paired-series");
    pairs = read_paired(in, cfg.delimiter);
  } else {
    if (!sentiment_series) {
      auto in = open_input(or_artifact(cfg.sentiment, cfg, files::index), "sentiment series");
      sentiment_series = read_series(in, cfg.delimiter);
    }
    if (!price_series) {
      if (!cfg.quotes.empty()) {
        auto in = open_input(cfg.quotes, "quote");
        price_series = market::quote_series(market::load_quotes(in, cfg.delimiter).bars, cfg.price_field);
      } else {
        auto in = open_input(cfg.output_dir / files::price, "price series");
        price_series = read_series(in, cfg.delimiter);
      }
    }
    summary.sentiment_points = sentiment_series->size();
    summary.price_points = price_series->size();

    const auto raw = timeseries::align(market::min_max_normalize(*sentiment_series),
                                       market::min_max_normalize(*price_series));
    pairs = timeseries::align(prepare_series(*sentiment_series, cfg), prepare_series(*price_series, cfg));
    write_file(cfg.output_dir / files::raw_pair, [&](std::ostream& out) {
      write_paired(out, raw, cfg.delimiter, "sentiment", "price");
    });
    write_file(cfg.output_dir / files::smoothed_pair, [&](std::ostream& out) {
      write_paired(out, pairs, cfg.delimiter, "avg_sentiment", "avg_price");
    });
  }
  summary.paired_points = pairs.size();
  write_file(cfg.output_dir / files::paired, [&](std::ostream& out) { write_paired(out, pairs, cfg.delimiter); });

  mic::MicOptions opts;
  opts.inclusive_b = cfg.inclusive_b;
  auto result = mic::mic(pairs, opts);
  summary.mic = result.mic;
  summary.best_x = result.best_x;
  summary.best_y = result.best_y;
  summary.b_of_n = result.b_of_n;
  report.mic = summary;
  write_file(cfg.output_dir / files::mic_report,
             [&](std::ostream& out) { mic::write_report(out, result, cfg.delimiter); });
  write_file(cfg.output_dir / files::matrix,
             [&](std::ostream& out) { mic::write_matrix(out, result.matrix, cfg.delimiter); });
  return result;
}

/// Every stage in order. Scores come from `scores` when given (preprocessing
/// then runs only if a comment file is configured), otherwise from the
/// lexicon scorer.
inline mic::MicResult run_pipeline(const PipelineConfig& cfg, RunReport& report) {
  if (cfg.scores.empty() && cfg.lexicon.empty()) {
    throw Error(Errc::missing_input, "pipeline needs either a scores file or a lexicon");
  }
  std::vector<sentiment::ScoredComment> scored;
  if (cfg.scores.empty()) {
    scored = run_score_lexicon(cfg, report, run_preprocess(cfg, report));
  } else {
    if (!cfg.comments.empty()) run_preprocess(cfg, report);
    auto in = open_input(cfg.scores, "scored-comment");
    scored = sentiment::load_scores(in, cfg.delimiter);
  }
  auto sentiment_series = run_index(cfg, report, std::move(scored));
  auto price = run_quotes(cfg, report);
  return run_mic(cfg, report, std::move(sentiment_series), std::move(price));
}

// ---------------------------------------------------------------------------
// Command entry points

enum class Command { preprocess, score_lexicon, index, quotes, mic, pipeline, report };

struct CommandOutcome {
  ExitCode exit = ExitCode::ok;
  std::string message;  // error text when exit != ok
  RunReport report;
};

/// Prints the run report and MIC summary found in the output directory.
inline void print_summary(const PipelineConfig& cfg, std::ostream& out) {
  auto report_in = open_input(cfg.output_dir / files::run_report, "run report");
  out << report_in.rdbuf();
  const auto mic_path = cfg.output_dir / files::mic_report;
  if (!fs::exists(mic_path)) return;
  auto mic_in = open_input(mic_path, "MIC report");
  out << "\n[mic_report]\n" << mic_in.rdbuf();

  auto matrix_in = open_input(cfg.output_dir / files::matrix, "characteristic matrix");
  auto table = delimited::read(matrix_in, cfg.delimiter);
  std::vector<std::pair<double, std::string>> entries;
  for (const auto& row : table.rows) {
    if (row.fields.size() != 3) throw ParseError(row.line, "matrix rows have 3 columns");
    auto v = delimited::parse_double(row.fields[2]);
    if (!v) throw ParseError(row.line, "bad matrix value");
    entries.emplace_back(*v, row.fields[0] + "x" + row.fields[1]);
  }
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  out << "\n[top grids]\n";
  for (std::size_t i = 0; i < std::min<std::size_t>(5, entries.size()); ++i) {
    out << entries[i].second << " = " << delimited::format_double(entries[i].first) << "\n";
  }
}

/// Runs one command and maps failures onto the exit-code contract:
/// 0 success, 2 usage or missing input, 3 data error, 4 analysis error.
inline CommandOutcome run_command(Command command, const PipelineConfig& cfg, std::ostream& out) {
  CommandOutcome outcome;
  try {
    cfg.validate();
    if (command == Command::report) {
      print_summary(cfg, out);
      return outcome;
    }
    OutputLock lock(cfg.output_dir);
    try {
      switch (command) {
        case Command::preprocess: run_preprocess(cfg, outcome.report); break;
        case Command::score_lexicon: run_score_lexicon(cfg, outcome.report); break;
        case Command::index: run_index(cfg, outcome.report); break;
        case Command::quotes: run_quotes(cfg, outcome.report); break;
        case Command::mic: run_mic(cfg, outcome.report); break;
        case Command::pipeline: run_pipeline(cfg, outcome.report); break;
        case Command::report: break;
      }
    } catch (const Error& e) {
      outcome.report.warnings.push_back(std::string("failed: ") + e.what());
      write_file(cfg.output_dir / files::run_report,
                 [&](std::ostream& o) { write_run_report(o, outcome.report); });
      throw;
    }
    write_file(cfg.output_dir / files::run_report, [&](std::ostream& o) { write_run_report(o, outcome.report); });
    write_run_report(out, outcome.report);
  } catch (const Error& e) {
    outcome.exit = exit_code_for(e.code());
    outcome.message = e.what();
  } catch (const std::exception& e) {
    outcome.exit = ExitCode::data;
    outcome.message = e.what();
  }
  return outcome;
}

}  // namespace sentimic::pipeline
