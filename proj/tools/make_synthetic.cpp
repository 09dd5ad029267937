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

// Writes a synthetic forum-comment file and an index quote file.
//
// Comments are drawn per trading day from a latent mood process, with the
// usual forum noise (markup, emoticon codes, over-long pastes, duplicates).
// In `coupled` mode the closing price is an affine function of the daily
// lexicon sentiment index the pipeline will compute; in `independent` mode
// it is i.i.d. noise around a fixed level, drawn from a separate generator.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sentimic/corpus.hpp"
#include "sentimic/market.hpp"
#include "sentimic/sentiment.hpp"

namespace {

using namespace sentimic;

// Portable uniform in [0, 1): the std distributions are not specified
// bit-for-bit across standard libraries.
double uniform(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

double normal(std::mt19937_64& g) {
  const double u1 = 1.0 - uniform(g);
  const double u2 = uniform(g);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

std::size_t pick(std::mt19937_64& g, std::size_t n) { return static_cast<std::size_t>(uniform(g) * n); }

double round2(double v) { return std::round(v * 100.0) / 100.0; }

const std::vector<std::string> kFiller = {
    "今天", "大盘", "资金", "板块", "指数", "明天", "感觉", "行情", "市场", "消息",
    "散户", "主力", "银行", "科技", "医药", "白酒", "券商", "尾盘", "午后", "成交量",
};
const std::vector<std::string> kNoise = {"<br>", "<b>", "</b>", "[微笑]", "[大笑]", "[图片]", "[哭]"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthetic comment and quote fixture generator"};
  std::string mode = "coupled", lexicon_path, out_dir;
  std::size_t days = 480;
  std::uint64_t seed = 1;
  app.add_option("--mode", mode, "coupled | independent")->check(CLI::IsMember({"coupled", "independent"}));
  app.add_option("--lexicon", lexicon_path, "Lexicon file")->required();
  app.add_option("--days", days, "Trading days to generate");
  app.add_option("--seed", seed, "Random seed");
  app.add_option("-o,--out", out_dir, "Output directory")->required();
  CLI11_PARSE(app, argc, argv);

  std::ifstream lex_in(lexicon_path);
  if (!lex_in) {
    std::cerr << "cannot open " << lexicon_path << "\n";
    return 2;
  }
  const auto lexicon = sentiment::load_lexicon(lex_in);
  const std::vector<std::string> pos(lexicon.positive().begin(), lexicon.positive().end());
  const std::vector<std::string> neg(lexicon.negative().begin(), lexicon.negative().end());

  std::mt19937_64 text_rng(seed);
  std::mt19937_64 price_rng(seed ^ 0x9E3779B97F4A7C15ULL);

  // Trading days: weekdays from 2020-01-02.
  using namespace std::chrono;
  std::vector<Date> dates;
  for (sys_days d = Date{year{2020}, January, day{2}}; dates.size() < days; d += std::chrono::days{1}) {
    const unsigned wd = weekday{d}.c_encoding();
    if (wd != 0 && wd != 6) dates.emplace_back(d);
  }

  std::vector<corpus::RawComment> raw;
  double mood = 0.5;
  for (const auto& date : dates) {
    mood = std::clamp(0.5 + 0.85 * (mood - 0.5) + 0.08 * normal(text_rng), 0.05, 0.95);
    const std::size_t count = 30 + pick(text_rng, 41);
    for (std::size_t c = 0; c < count; ++c) {
      std::string text;
      const std::size_t words = 2 + pick(text_rng, 4);
      for (std::size_t w = 0; w < words; ++w) text += kFiller[pick(text_rng, kFiller.size())];
      const std::size_t terms = pick(text_rng, 4);
      for (std::size_t t = 0; t < terms; ++t) {
        text += "，";
        text += uniform(text_rng) < mood ? pos[pick(text_rng, pos.size())] : neg[pick(text_rng, neg.size())];
      }
      text += uniform(text_rng) < 0.5 ? "！" : "。";
      if (uniform(text_rng) < 0.15) text = kNoise[pick(text_rng, kNoise.size())] + text;
      if (uniform(text_rng) < 0.10) text += " " + kNoise[pick(text_rng, kNoise.size())];
      if (uniform(text_rng) < 0.03) {
        while (utf8::length(text) < 160) text += kFiller[pick(text_rng, kFiller.size())];
      }
      const auto reads = static_cast<std::int64_t>(1 + pick(text_rng, 5000));
      raw.push_back({date, text, reads, static_cast<std::int64_t>(pick(text_rng, 20)), ""});
      if (uniform(text_rng) < 0.05) raw.push_back(raw.back());
    }
  }

  // The daily index the pipeline will see, computed with its own stages.
  std::vector<corpus::CleanComment> cleaned;
  for (const auto& r : raw) {
    const auto result = corpus::clean(r);
    if (const auto* c = std::get_if<corpus::CleanComment>(&result)) cleaned.push_back(*c);
  }
  std::vector<double> emotions;
  for (const auto& batch : corpus::select_daily_top(corpus::dedupe(cleaned))) {
    std::vector<sentiment::ScoredComment> scored;
    for (const auto& c : batch.comments) scored.push_back({c.date, c.text, sentiment::lexicon_score(c.text, lexicon)});
    emotions.push_back(sentiment::daily_index(scored, batch.date).emotions);
  }

  std::vector<market::QuoteBar> bars;
  double prev_close = 12000.0;
  for (std::size_t i = 0; i < dates.size(); ++i) {
    double close;
    if (mode == "coupled") {
      close = round2(12000.0 + 4000.0 * emotions[i]);
    } else {
      close = round2(12000.0 + 300.0 * normal(price_rng));
    }
    market::QuoteBar b;
    b.date = dates[i];
    b.close = close;
    b.pre_close = prev_close;
    b.open = round2(prev_close + 20.0 * normal(price_rng));
    b.high = round2(std::max(b.open, b.close) + 40.0 * uniform(price_rng));
    b.low = round2(std::min(b.open, b.close) - 40.0 * uniform(price_rng));
    b.change = round2(b.close - b.pre_close);
    b.pct_chg = std::round(b.change / b.pre_close * 1e6) / 1e4;
    b.vol = std::round(3.0e8 + 1.0e8 * uniform(price_rng));
    b.amount = std::round(4.0e8 + 1.5e8 * uniform(price_rng));
    bars.push_back(b);
    prev_close = close;
  }
  std::reverse(bars.begin(), bars.end());  // vendor files list newest first

  std::ofstream comments_out(out_dir + "/comments.tsv", std::ios::binary);
  delimited::write_row(comments_out, {"date", "text", "reads", "comments", "source"}, '\t');
  for (const auto& r : raw) {
    delimited::write_row(comments_out,
                         {to_iso(r.date), r.text, std::to_string(r.reads), std::to_string(r.comment_count),
                          r.source_url},
                         '\t');
  }
  std::ofstream quotes_out(out_dir + "/quotes.tsv", std::ios::binary);
  market::write_quotes(quotes_out, bars);
  if (!comments_out || !quotes_out) {
    std::cerr << "cannot write into " << out_dir << "\n";
    return 2;
  }
  return 0;
}
