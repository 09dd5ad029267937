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

// sentimic: forum-sentiment and market-price dependence toolkit.
//
//   sentimic preprocess    --comments raw.tsv -o out/
//   sentimic score-lexicon --lexicon lexicon.txt -o out/
//   sentimic index         -o out/               (or --scores scored.tsv)
//   sentimic quotes        --quotes quotes.tsv -o out/
//   sentimic mic           --quotes quotes.tsv -o out/   (or --paired p.tsv)
//   sentimic pipeline      --comments ... --lexicon ... --quotes ... -o out/
//   sentimic report        -o out/
//
// Settings come from a `key = value` file (--config, or $SENTIMIC_CONFIG);
// command-line flags override it.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sentimic/pipeline.hpp"

namespace {

using sentimic::pipeline::Command;
using sentimic::pipeline::PipelineConfig;

template <class T>
void override(PipelineConfig& cfg, const char* key, const std::optional<T>& value) {
  if (!value) return;
  if constexpr (std::is_same_v<T, bool>) {
    sentimic::pipeline::apply_setting(cfg, key, *value ? "true" : "false");
  } else if constexpr (std::is_same_v<T, std::string>) {
    sentimic::pipeline::apply_setting(cfg, key, *value);
  } else {
    sentimic::pipeline::apply_setting(cfg, key, std::to_string(*value));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forum sentiment index and market-price dependence (MIC) toolkit"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::optional<std::string> config_path, comments, cleaned, scores, quotes, lexicon, sentiment, paired, output,
      delimiter, price_field;
  std::optional<std::size_t> top_k, max_chars, window, min_periods;
  std::optional<bool> normalize_first, inclusive_b, strict;
  bool smooth_first = false;

  app.add_option("--config", config_path, "Key-value config file")->envname(sentimic::pipeline::kConfigEnv);
  app.add_option("--comments", comments, "Raw comment file");
  app.add_option("--cleaned", cleaned, "Cleaned-comment file (default: <out>/cleaned_comments.tsv)");
  app.add_option("--scores", scores, "Scored-comment file from an external scorer");
  app.add_option("--quotes", quotes, "Quote file (YYYYMMDD dates)");
  app.add_option("--lexicon", lexicon, "Lexicon file with [positive]/[negative] sections");
  app.add_option("--sentiment", sentiment, "Sentiment series file (default: <out>/sentiment_index.tsv)");
  app.add_option("--paired", paired, "Paired series file `date, x, y`; mic runs on it directly");
  app.add_option("-o,--out", output, "Output directory");
  app.add_option("--delimiter", delimiter, "Field delimiter: one character or `tab`");
  app.add_option("--price-field", price_field, "close | open | high | low | vol | amount");
  app.add_option("--top-k", top_k, "Comments kept per day");
  app.add_option("--max-chars", max_chars, "Drop comments of at least this many characters");
  app.add_option("--window", window, "Rolling-mean window (observations)");
  app.add_option("--min-periods", min_periods, "Minimum observations per window");
  app.add_option("--normalize-before-smoothing", normalize_first, "Normalize, then smooth (default true)");
  app.add_flag("--smooth-first", smooth_first, "Smooth, then normalize");
  app.add_flag("--inclusive-b", inclusive_b, "Admit grids with x*y <= B(n)");
  app.add_flag("--strict", strict, "Abort on the first malformed row");

  struct Sub {
    const char* name;
    const char* help;
    Command command;
  };
  const Sub subs[] = {
      {"preprocess", "Clean, deduplicate and select comments; write length statistics", Command::preprocess},
      {"score-lexicon", "Score cleaned comments with the lexicon scorer", Command::score_lexicon},
      {"index", "Build the daily sentiment index from scored comments", Command::index},
      {"quotes", "Load quotes and write the price series", Command::quotes},
      {"mic", "Normalize, smooth, align and compute the MIC", Command::mic},
      {"pipeline", "Run every stage", Command::pipeline},
      {"report", "Print the run report of an output directory", Command::report},
  };
  for (const auto& s : subs) app.add_subcommand(s.name, s.help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(sentimic::pipeline::ExitCode::usage);
  }

  PipelineConfig cfg;
  try {
    if (config_path) sentimic::pipeline::apply_config_file(cfg, *config_path);
    override(cfg, "comments", comments);
    override(cfg, "cleaned", cleaned);
    override(cfg, "scores", scores);
    override(cfg, "quotes", quotes);
    override(cfg, "lexicon", lexicon);
    override(cfg, "sentiment", sentiment);
    override(cfg, "paired", paired);
    override(cfg, "output", output);
    override(cfg, "delimiter", delimiter);
    override(cfg, "price_field", price_field);
    override(cfg, "top_k", top_k);
    override(cfg, "max_chars", max_chars);
    override(cfg, "window", window);
    override(cfg, "min_periods", min_periods);
    override(cfg, "normalize_before_smoothing", normalize_first);
    if (smooth_first) cfg.normalize_before_smoothing = false;
    override(cfg, "inclusive_b", inclusive_b);
    override(cfg, "strict", strict);
  } catch (const sentimic::Error& e) {
    std::cerr << "sentimic: " << e.what() << "\n";
    return static_cast<int>(sentimic::pipeline::exit_code_for(e.code()));
  }

  Command command = Command::pipeline;
  for (const auto& s : subs) {
    if (app.got_subcommand(s.name)) command = s.command;
  }
  const auto outcome = sentimic::pipeline::run_command(command, cfg, std::cout);
  if (outcome.exit != sentimic::pipeline::ExitCode::ok) std::cerr << "sentimic: " << outcome.message << "\n";
  return static_cast<int>(outcome.exit);
}
