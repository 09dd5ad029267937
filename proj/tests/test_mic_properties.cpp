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

// Seeded property checks for the MIC search.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "mic_oracle.hpp"
#include "sentimic/mic.hpp"
#include "test_support.hpp"

namespace {

using namespace sentimic;
using namespace sentimic::mic;
using sentimic::testing::uniform;

PairedSeries pairs_of(std::vector<double> x, std::vector<double> y) {
  return PairedSeries::from_values(std::move(x), std::move(y));
}

// Mix of continuous, tied and discrete coordinates.
std::vector<double> draw(std::mt19937_64& g, std::size_t n, int style) {
  std::vector<double> v(n);
  for (auto& x : v) {
    switch (style) {
      case 0: x = uniform(g); break;
      case 1: x = static_cast<double>(g() % 4); break;
      default: x = std::floor(uniform(g) * 10.0) / 10.0; break;
    }
  }
  if (*std::min_element(v.begin(), v.end()) == *std::max_element(v.begin(), v.end())) v[0] += 1.0;
  return v;
}

TEST(MicProperties, HeuristicNeverExceedsBruteForce) {
  std::mt19937_64 g(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 8 + g() % 13;
    auto x = draw(g, n, static_cast<int>(g() % 3));
    auto y = draw(g, n, static_cast<int>(g() % 3));
    if (g() % 3 == 0) {
      for (std::size_t i = 0; i < n; ++i) y[i] = x[i] * x[i] + 0.2 * uniform(g);
    }
    const auto p = pairs_of(x, y);
    for (int a = 2; a <= 5; ++a) {
      for (int b = 2; a * b <= 12; ++b) {
        const double h = max_mi_for_dims(p, a, b);
        const double o = brute_force_max_mi(p, a, b);
        EXPECT_LE(h, o + 1e-9) << "trial " << trial << " dims " << a << "x" << b;
        EXPECT_NEAR(o, sentimic::testing::oracle_max_mi(x, y, a, b), 1e-12);
      }
    }
  }
}

TEST(MicProperties, AgreesWithExhaustiveOnMonotoneData) {
  std::mt19937_64 g(99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 8 + g() % 13;
    std::vector<double> x(n), y(n);
    for (auto& v : x) v = uniform(g);
    for (std::size_t i = 0; i < n; ++i) y[i] = trial % 2 ? std::exp(3 * x[i]) : -x[i] * x[i] * x[i];
    for (bool inclusive : {false, true}) {
      MicOptions opts;
      opts.inclusive_b = inclusive;
      const auto p = pairs_of(x, y);
      const auto fast = mic::mic(p, opts);
      const auto slow = mic_exhaustive(p, opts);
      EXPECT_NEAR(fast.mic, slow.mic, 1e-9);
      ASSERT_EQ(fast.matrix.entries.size(), slow.matrix.entries.size());
      for (const auto& [dims, v] : slow.matrix.entries) EXPECT_NEAR(fast.matrix.entries.at(dims), v, 1e-9);
    }
  }
}

TEST(MicProperties, PerfectDependenceScoresOne) {
  for (std::size_t n : {8u, 20u, 100u, 500u, 1000u}) {
    std::vector<double> x(n), up(n), down(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = static_cast<double>(i) / static_cast<double>(n);
      up[i] = std::exp(x[i]);
      down[i] = 1.0 - x[i];
    }
    EXPECT_NEAR(mic::mic(pairs_of(x, up)).mic, 1.0, 1e-9) << n;
    EXPECT_NEAR(mic::mic(pairs_of(x, down)).mic, 1.0, 1e-9) << n;
  }
}

TEST(MicProperties, OddSampleCannotSplitEvenly) {
  // Nine monotone points: the best 2x2 grid splits 4/5 on both axes, so the
  // score is the entropy of (4/9, 5/9) in bits.
  std::vector<double> x(9);
  std::iota(x.begin(), x.end(), 0.0);
  const double h = -(4.0 / 9) * std::log2(4.0 / 9) - (5.0 / 9) * std::log2(5.0 / 9);
  EXPECT_NEAR(mic::mic(pairs_of(x, x)).mic, h, 1e-12);
}

TEST(MicProperties, SymmetricBitExact) {
  std::mt19937_64 g(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 20 + g() % 200;
    const auto x = draw(g, n, static_cast<int>(g() % 3));
    const auto y = draw(g, n, static_cast<int>(g() % 3));
    EXPECT_EQ(mic::mic(pairs_of(x, y)).mic, mic::mic(pairs_of(y, x)).mic);
  }
}

TEST(MicProperties, InvariantUnderStrictlyIncreasingTransforms) {
  const std::vector<std::function<double(double)>> transforms = {
      [](double v) { return v * v * v; },
      [](double v) { return std::exp(v); },
      [](double v) { return 3.5 * v - 2.0; },
  };
  std::mt19937_64 g(17);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 10 + g() % 300;
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = 1.0 + uniform(g);
      y[i] = std::sin(4 * x[i]) + uniform(g);
    }
    const double base = mic::mic(pairs_of(x, y)).mic;
    for (const auto& f : transforms) {
      std::vector<double> fx(n), fy(n);
      std::transform(x.begin(), x.end(), fx.begin(), f);
      std::transform(y.begin(), y.end(), fy.begin(), f);
      EXPECT_EQ(mic::mic(pairs_of(fx, y)).mic, base);
      EXPECT_EQ(mic::mic(pairs_of(x, fy)).mic, base);
    }
  }
}

TEST(MicProperties, IndependentOfPointOrder) {
  std::mt19937_64 g(23);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 30 + g() % 150;
    auto x = draw(g, n, static_cast<int>(g() % 3));
    auto y = draw(g, n, static_cast<int>(g() % 3));
    const auto r = mic::mic(pairs_of(x, y));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), g);
    std::vector<double> px(n), py(n);
    for (std::size_t i = 0; i < n; ++i) {
      px[i] = x[perm[i]];
      py[i] = y[perm[i]];
    }
    const auto s = mic::mic(pairs_of(px, py));
    EXPECT_EQ(s.mic, r.mic);
    EXPECT_EQ(s.matrix.entries, r.matrix.entries);
  }
}

TEST(MicProperties, BoundedAndRepeatable) {
  std::mt19937_64 g(41);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 4 + g() % 400;
    const auto x = draw(g, n, static_cast<int>(g() % 3));
    const auto y = draw(g, n, static_cast<int>(g() % 3));
    const auto a = mic::mic(pairs_of(x, y));
    const auto b = mic::mic(pairs_of(x, y));
    EXPECT_GE(a.mic, 0.0);
    EXPECT_LE(a.mic, 1.0);
    EXPECT_EQ(a.mic, b.mic);
    EXPECT_EQ(a.best_x, b.best_x);
    EXPECT_EQ(a.best_y, b.best_y);
  }
}

TEST(MicProperties, IndependentUniformStaysLow) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    std::mt19937_64 g(seed);
    std::vector<double> x(200), y(200);
    for (std::size_t i = 0; i < 200; ++i) {
      x[i] = uniform(g);
      y[i] = uniform(g);
    }
    EXPECT_LT(mic::mic(pairs_of(x, y)).mic, 0.35) << seed;
  }
}

}  // namespace
