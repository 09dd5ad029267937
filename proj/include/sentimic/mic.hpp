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

// Maximal Information Coefficient.
//
// For every grid resolution (x, y) with x*y below the budget B(n) ~ n^0.6,
// the mutual information of the paired sample is maximised over grid
// placements, normalised by log2(min(x, y)), and the largest normalised
// value is the MIC.
//
// The grid search follows the usual approximation: one axis is split into
// rank-equipartitioned bins, and the cuts on the other axis are chosen by an
// exact dynamic program over the remaining candidate positions. Both
// orientations are tried. brute_force_max_mi enumerates every placement and
// serves as the reference for small samples.
//
// All quantities depend on the data only through the ordering and tie
// structure of each coordinate, and mutual information is summed exactly, so
// results are invariant (bit-for-bit) under strictly increasing transforms of
// either coordinate and under swapping the coordinates.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "sentimic/delimited.hpp"
#include "sentimic/error.hpp"
#include "sentimic/numeric.hpp"
#include "sentimic/series.hpp"

namespace sentimic::mic {

inline constexpr double kBudgetExponent = 0.6;
inline constexpr int kMinBudget = 5;
inline constexpr std::size_t kOracleMaxPoints = 20;

/// Internal cut points per axis. A value v falls in bin i when
/// cuts[i-1] < v <= cuts[i]; the outer bins are unbounded.
struct GridPartition {
  std::vector<double> x_cuts;
  std::vector<double> y_cuts;

  std::size_t x_bins() const noexcept { return x_cuts.size() + 1; }
  std::size_t y_bins() const noexcept { return y_cuts.size() + 1; }

  friend bool operator==(const GridPartition&, const GridPartition&) = default;
};

/// Cell counts of an x-by-y grid, stored x-major.
class JointHistogram {
 public:
  JointHistogram(std::size_t x_bins, std::size_t y_bins)
      : x_bins_(x_bins), y_bins_(y_bins), counts_(x_bins * y_bins, 0) {}

  /// Builds from rows indexed by x bin, each holding the y-bin counts.
  static JointHistogram from_rows(const std::vector<std::vector<std::uint64_t>>& rows) {
    const std::size_t ny = rows.empty() ? 0 : rows.front().size();
    JointHistogram h(rows.size(), ny);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != ny) throw Error(Errc::invalid_argument, "ragged histogram rows");
      for (std::size_t j = 0; j < ny; ++j) h.add(i, j, rows[i][j]);
    }
    return h;
  }

  void add(std::size_t i, std::size_t j, std::uint64_t count = 1) {
    counts_[i * y_bins_ + j] += count;
    n_ += count;
  }

  std::size_t x_bins() const noexcept { return x_bins_; }
  std::size_t y_bins() const noexcept { return y_bins_; }
  std::uint64_t n() const noexcept { return n_; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return counts_[i * y_bins_ + j]; }
  std::span<const std::uint64_t> cells() const noexcept { return counts_; }

 private:
  std::size_t x_bins_;
  std::size_t y_bins_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t n_ = 0;
};

/// Normalised mutual information per grid resolution.
struct CharacteristicMatrix {
  std::map<std::pair<int, int>, double> entries;  // (x, y) -> value in [0, 1]
};

struct MicResult {
  double mic = 0.0;
  int best_x = 0;
  int best_y = 0;
  int b_of_n = 0;
  CharacteristicMatrix matrix;
  GridPartition best_grid;  // may use fewer bins than (best_x, best_y)
};

struct MicOptions {
  /// Admit grids with x*y <= B(n) instead of x*y < B(n).
  bool inclusive_b = false;
  /// Candidate cut positions on the optimised axis are capped at
  /// clump_factor times the largest column count searched.
  std::size_t clump_factor = 15;
};

// ---------------------------------------------------------------------------
// Grid budget

/// floor(n^0.6), raised to 5 so the 2x2 grid is always admissible.
inline int b_of_n(std::size_t n) {
  if (n < 4) throw Error(Errc::too_few_points, "MIC needs at least 4 points, got " + std::to_string(n));
  // b = floor(n^(3/5)) is the largest b with b^5 <= n^3; refine the
  // floating-point estimate with exact integer arithmetic.
  using u128 = unsigned __int128;
  const u128 n3 = static_cast<u128>(n) * n * n;
  auto pow5 = [](std::uint64_t b) { return static_cast<u128>(b) * b * b * b * b; };
  auto b = static_cast<std::uint64_t>(std::floor(std::pow(static_cast<double>(n), kBudgetExponent)));
  while (b > 0 && pow5(b) > n3) --b;
  while (pow5(b + 1) <= n3) ++b;
  return std::max(static_cast<int>(b), kMinBudget);
}

inline bool admissible(int x, int y, int budget, bool inclusive) {
  if (x < 2 || y < 2) return false;
  const long long cells = static_cast<long long>(x) * y;
  return inclusive ? cells <= budget : cells < budget;
}

/// Largest column count c >= 2 with (c, rows) admissible, or 0 if none.
inline int max_columns(int rows, int budget, bool inclusive) {
  if (rows < 2) return 0;
  const int c = inclusive ? budget / rows : (budget - 1) / rows;
  return c >= 2 ? c : 0;
}

// ---------------------------------------------------------------------------
// Histogram and mutual information

namespace detail {

inline std::size_t bin_of(double v, std::span<const double> cuts) {
  // First cut >= v; values equal to a cut stay in the lower bin.
  return static_cast<std::size_t>(std::lower_bound(cuts.begin(), cuts.end(), v) - cuts.begin());
}

// c * log2(c); exact for powers of two.
inline double xlogx(std::uint64_t c) {
  if (c == 0) return 0.0;
  const double d = static_cast<double>(c);
  return d * std::log2(d);
}

}  // namespace detail

inline JointHistogram histogram(const PairedSeries& pairs, const GridPartition& grid) {
  JointHistogram h(grid.x_bins(), grid.y_bins());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    h.add(detail::bin_of(pairs.x()[k], grid.x_cuts), detail::bin_of(pairs.y()[k], grid.y_cuts));
  }
  return h;
}

/// Mutual information of the empirical cell distribution, in bits.
///
/// Evaluated as (sum c lg c - sum r lg r - sum s lg s + n lg n) / n over
/// cells c, x-marginals r and y-marginals s, with one exact summation over
/// all terms. The value is therefore identical under any permutation of
/// rows or columns and under transposition.
inline double mutual_information(const JointHistogram& h) {
  if (h.n() == 0) return 0.0;
  std::vector<double> terms;
  terms.reserve(h.cells().size() + h.x_bins() + h.y_bins() + 1);
  std::vector<std::uint64_t> row(h.x_bins(), 0), col(h.y_bins(), 0);
  for (std::size_t i = 0; i < h.x_bins(); ++i) {
    for (std::size_t j = 0; j < h.y_bins(); ++j) {
      const auto c = h.at(i, j);
      if (c == 0) continue;
      terms.push_back(detail::xlogx(c));
      row[i] += c;
      col[j] += c;
    }
  }
  for (auto r : row) {
    if (r) terms.push_back(-detail::xlogx(r));
  }
  for (auto s : col) {
    if (s) terms.push_back(-detail::xlogx(s));
  }
  terms.push_back(detail::xlogx(h.n()));
  return std::max(0.0, numeric::exact_sum(terms) / static_cast<double>(h.n()));
}

/// I / log2(min(x, y)), clamped into [0, 1].
inline double normalized_mi(double information, int x, int y) {
  if (x < 2 || y < 2) throw Error(Errc::invalid_argument, "normalized_mi: grid dimensions must be >= 2");
  return std::clamp(information / std::log2(static_cast<double>(std::min(x, y))), 0.0, 1.0);
}

// ---------------------------------------------------------------------------
// Partition search

namespace detail {

// Points sorted by one coordinate and split into runs of equal values.
struct SortedAxis {
  std::vector<std::size_t> order;   // point indices, ascending value
  std::vector<std::size_t> starts;  // start offset of each tie run in `order`, plus sentinel

  std::size_t groups() const { return starts.size() - 1; }
  std::size_t group_size(std::size_t g) const { return starts[g + 1] - starts[g]; }
};

inline SortedAxis sort_axis(std::span<const double> v) {
  SortedAxis axis;
  axis.order.resize(v.size());
  std::iota(axis.order.begin(), axis.order.end(), std::size_t{0});
  std::stable_sort(axis.order.begin(), axis.order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  for (std::size_t i = 0; i < axis.order.size(); ++i) {
    if (i == 0 || v[axis.order[i]] != v[axis.order[i - 1]]) axis.starts.push_back(i);
  }
  axis.starts.push_back(axis.order.size());
  return axis;
}

// Assigns consecutive groups (never split) to at most `bins` bins of nearly
// equal total size. Returns the bin index of every group.
inline std::vector<std::size_t> group_bins(std::span<const std::size_t> sizes, std::size_t bins) {
  const std::size_t total = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  std::vector<std::size_t> bin(sizes.size(), 0);
  std::size_t current = 0;
  std::size_t filled = 0;    // points in the current bin
  std::size_t consumed = 0;  // points in earlier bins
  double target = static_cast<double>(total) / static_cast<double>(bins);
  for (std::size_t g = 0; g < sizes.size(); ++g) {
    const double s = static_cast<double>(sizes[g]);
    const double h = static_cast<double>(filled);
    if (filled != 0 && current + 1 < bins && std::fabs(h + s - target) >= std::fabs(h - target)) {
      consumed += filled;
      ++current;
      filled = 0;
      target = static_cast<double>(total - consumed) / static_cast<double>(bins - current);
    }
    bin[g] = current;
    filled += sizes[g];
  }
  return bin;
}

// Cut strictly between neighbouring values lo < hi, such that lo falls in
// the lower bin and hi in the upper one.
inline double cut_between(double lo, double hi) {
  const double mid = lo + (hi - lo) / 2.0;
  return mid < hi ? mid : lo;
}

struct Equipartition {
  std::vector<std::size_t> row;  // per point
  std::size_t rows = 0;
  std::vector<double> cuts;
};

inline Equipartition equipartition(std::span<const double> v, const SortedAxis& axis, std::size_t bins) {
  std::vector<std::size_t> sizes(axis.groups());
  for (std::size_t g = 0; g < sizes.size(); ++g) sizes[g] = axis.group_size(g);
  const auto bin = group_bins(sizes, bins);
  Equipartition eq;
  eq.row.resize(v.size());
  for (std::size_t g = 0; g < sizes.size(); ++g) {
    for (std::size_t i = axis.starts[g]; i < axis.starts[g + 1]; ++i) eq.row[axis.order[i]] = bin[g];
    if (g > 0 && bin[g] != bin[g - 1]) {
      eq.cuts.push_back(cut_between(v[axis.order[axis.starts[g] - 1]], v[axis.order[axis.starts[g]]]));
    }
  }
  eq.rows = sizes.empty() ? 0 : bin.back() + 1;
  return eq;
}

// Best partition of the optimised axis for one column budget.
struct AxisOptimum {
  double mi = 0.0;  // bits
  std::vector<double> cuts;
  JointHistogram hist{1, 1};  // optimised axis x equipartitioned axis
};

// Optimises cuts on coordinate `a` against a fixed equipartition of `b` into
// `rows` bins. Returns, for every column budget 1..max_cols, the best
// partition with at most that many columns (index 0 unused).
inline std::vector<AxisOptimum> optimize_axis(std::span<const double> a, std::span<const double> b,
                                              std::size_t rows, std::size_t max_cols,
                                              std::size_t max_units) {
  const std::size_t n = a.size();
  const auto b_axis = sort_axis(b);
  const auto eq = equipartition(b, b_axis, rows);
  const std::size_t q = std::max<std::size_t>(eq.rows, 1);
  const auto a_axis = sort_axis(a);

  // Tie runs of `a` are indivisible. Adjacent runs lying wholly in one and
  // the same row are merged into clumps: an optimal cut never separates them.
  struct Unit {
    std::size_t begin, end;  // range in a_axis.order
    std::size_t pure_row;    // row of every point, or q when mixed
  };
  std::vector<Unit> clumps;
  for (std::size_t g = 0; g < a_axis.groups(); ++g) {
    const std::size_t s = a_axis.starts[g], e = a_axis.starts[g + 1];
    std::size_t r = eq.row[a_axis.order[s]];
    for (std::size_t i = s + 1; i < e; ++i) {
      if (eq.row[a_axis.order[i]] != r) {
        r = q;
        break;
      }
    }
    if (!clumps.empty() && r != q && clumps.back().pure_row == r) {
      clumps.back().end = e;
    } else {
      clumps.push_back({s, e, r});
    }
  }

  // Too many clumps: merge neighbours into superclumps of nearly equal mass.
  std::vector<Unit> units;
  if (clumps.size() > max_units) {
    std::vector<std::size_t> sizes(clumps.size());
    for (std::size_t c = 0; c < clumps.size(); ++c) sizes[c] = clumps[c].end - clumps[c].begin;
    const auto bin = group_bins(sizes, max_units);
    for (std::size_t c = 0; c < clumps.size(); ++c) {
      if (c > 0 && bin[c] == bin[c - 1]) units.back().end = clumps[c].end;
      else units.push_back(clumps[c]);
    }
  } else {
    units = std::move(clumps);
  }
  const std::size_t k = units.size();

  // cum[u * q + r]: points of row r in units [0, u).
  std::vector<std::uint64_t> cum((k + 1) * q, 0);
  for (std::size_t u = 0; u < k; ++u) {
    std::copy_n(cum.begin() + u * q, q, cum.begin() + (u + 1) * q);
    for (std::size_t i = units[u].begin; i < units[u].end; ++i) ++cum[(u + 1) * q + eq.row[a_axis.order[i]]];
  }
  std::vector<double> xlogx_table(n + 1);
  for (std::size_t c = 0; c <= n; ++c) xlogx_table[c] = xlogx(c);

  // Column cost N log N - sum_r c_r log c_r is n * H(rows | column); the
  // total over columns is minimised, which maximises I for fixed rows.
  const std::size_t layers = std::min(max_cols, k);
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> best((layers + 1) * (k + 1), inf);  // best[l * (k+1) + t]
  std::vector<std::size_t> parent((layers + 1) * (k + 1), 0);
  std::vector<double> cost(k + 1);
  for (std::size_t t = 1; t <= k; ++t) {
    for (std::size_t s = 0; s < t; ++s) {
      std::uint64_t total = 0;
      double acc = 0.0;
      for (std::size_t r = 0; r < q; ++r) {
        const auto c = cum[t * q + r] - cum[s * q + r];
        total += c;
        acc += xlogx_table[c];
      }
      cost[s] = xlogx_table[total] - acc;
    }
    best[1 * (k + 1) + t] = cost[0];
    for (std::size_t l = 2; l <= std::min(layers, t); ++l) {
      double value = inf;
      std::size_t arg = 0;
      for (std::size_t s = l - 1; s < t; ++s) {
        const double v = best[(l - 1) * (k + 1) + s] + cost[s];
        if (v < value) {
          value = v;
          arg = s;
        }
      }
      best[l * (k + 1) + t] = value;
      parent[l * (k + 1) + t] = arg;
    }
  }

  std::vector<AxisOptimum> out(max_cols + 1);
  std::size_t chosen = 1;
  for (std::size_t cols = 1; cols <= max_cols; ++cols) {
    if (cols <= layers && best[cols * (k + 1) + k] < best[chosen * (k + 1) + k]) chosen = cols;

    // Unit boundaries of the chosen partition, right to left.
    std::vector<std::size_t> bounds{k};
    for (std::size_t l = chosen, t = k; l > 1; --l) {
      t = parent[l * (k + 1) + t];
      bounds.push_back(t);
    }
    bounds.push_back(0);
    std::reverse(bounds.begin(), bounds.end());

    AxisOptimum opt;
    opt.hist = JointHistogram(bounds.size() - 1, q);
    for (std::size_t c = 0; c + 1 < bounds.size(); ++c) {
      for (std::size_t r = 0; r < q; ++r) {
        opt.hist.add(c, r, cum[bounds[c + 1] * q + r] - cum[bounds[c] * q + r]);
      }
      if (c > 0) {
        const auto& left = units[bounds[c] - 1];
        const auto& right = units[bounds[c]];
        opt.cuts.push_back(cut_between(a[a_axis.order[left.end - 1]], a[a_axis.order[right.begin]]));
      }
    }
    opt.mi = mutual_information(opt.hist);
    out[cols] = std::move(opt);
  }
  return out;
}

// Result of one orientation for one grid resolution, mapped back to (x, y).
struct GridOptimum {
  double mi = 0.0;
  GridPartition grid;
};

inline std::vector<double> equipartition_cuts(std::span<const double> v, std::size_t bins) {
  return equipartition(v, sort_axis(v), bins).cuts;
}

}  // namespace detail

namespace detail {

inline void require_dims(std::size_t n, int x, int y) {
  if (x < 2 || y < 2) throw Error(Errc::invalid_argument, "grid dimensions must be >= 2");
  if (n < static_cast<std::size_t>(std::max(x, y))) {
    throw Error(Errc::too_few_points, "need at least max(x, y) points for the requested grid");
  }
}

inline int budget_or_zero(std::size_t n) { return n < 4 ? 0 : b_of_n(n); }

// Candidate cap used when `cols` columns are optimised against `rows`
// equipartitioned bins. Depends only on (n, rows, cols), so a single
// resolution and the full search see the same candidates.
inline std::size_t unit_cap(std::size_t n, int rows, int cols, const MicOptions& opts) {
  const int budget_cols = max_columns(rows, budget_or_zero(n), opts.inclusive_b);
  return opts.clump_factor * static_cast<std::size_t>(std::max(cols, budget_cols));
}

// Both orientations of resolution (x, y); the x-optimised one wins ties.
inline GridOptimum best_of_orientations(const PairedSeries& pairs, int x, int y,
                                        const AxisOptimum& x_optimised, const AxisOptimum& y_optimised) {
  const auto x_rows = equipartition_cuts(pairs.y(), static_cast<std::size_t>(y));
  if (x_optimised.mi >= y_optimised.mi) {
    return {x_optimised.mi, {x_optimised.cuts, x_rows}};
  }
  return {y_optimised.mi, {equipartition_cuts(pairs.x(), static_cast<std::size_t>(x)), y_optimised.cuts}};
}

}  // namespace detail

/// Approximate maximum of mutual_information over all x-by-y grids.
inline double max_mi_for_dims(const PairedSeries& pairs, int x, int y, const MicOptions& opts = {}) {
  const std::size_t n = pairs.size();
  detail::require_dims(n, x, y);
  const auto along_x =
      detail::optimize_axis(pairs.x(), pairs.y(), y, x, detail::unit_cap(n, y, x, opts));
  const auto along_y =
      detail::optimize_axis(pairs.y(), pairs.x(), x, y, detail::unit_cap(n, x, y, opts));
  return std::max(along_x[x].mi, along_y[y].mi);
}

/// Exact maximum of mutual_information over every x-by-y grid whose cuts
/// fall between consecutive distinct values. An axis with fewer distinct
/// values than bins takes every possible cut. Limited to 20 points.
inline double brute_force_max_mi(const PairedSeries& pairs, int x, int y) {
  const std::size_t n = pairs.size();
  if (n > kOracleMaxPoints) {
    throw Error(Errc::oracle_limit, "brute_force_max_mi is limited to 20 points, got " + std::to_string(n));
  }
  detail::require_dims(n, x, y);

  // Rank of each point among the distinct values of its coordinate.
  auto ranks = [](std::span<const double> v, std::size_t& distinct) {
    std::vector<double> sorted(v.begin(), v.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    distinct = sorted.size();
    std::vector<std::size_t> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      r[i] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v[i]) - sorted.begin());
    }
    return r;
  };
  std::size_t dx = 0, dy = 0;
  const auto rx = ranks(pairs.x(), dx);
  const auto ry = ranks(pairs.y(), dy);

  // Visits every choice of `cuts` gaps among `gaps`, as a gap -> bin map.
  auto for_each_cut_set = [](std::size_t gaps, std::size_t cuts, auto&& visit) {
    std::vector<bool> mask(gaps, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(cuts), true);
    std::vector<std::size_t> bin_of_rank(gaps + 1);
    do {
      std::size_t b = 0;
      for (std::size_t r = 0; r <= gaps; ++r) {
        bin_of_rank[r] = b;
        if (r < gaps && mask[r]) ++b;
      }
      visit(bin_of_rank, cuts + 1);
    } while (std::prev_permutation(mask.begin(), mask.end()));
  };

  const std::size_t cx = std::min<std::size_t>(x - 1, dx - 1);
  const std::size_t cy = std::min<std::size_t>(y - 1, dy - 1);
  double best = 0.0;
  for_each_cut_set(dx - 1, cx, [&](const std::vector<std::size_t>& xbin, std::size_t xb) {
    for_each_cut_set(dy - 1, cy, [&](const std::vector<std::size_t>& ybin, std::size_t yb) {
      JointHistogram h(xb, yb);
      for (std::size_t k = 0; k < n; ++k) h.add(xbin[rx[k]], ybin[ry[k]]);
      best = std::max(best, mutual_information(h));
    });
  });
  return best;
}

namespace detail {

inline void check_mic_input(const PairedSeries& pairs) {
  const std::size_t n = pairs.size();
  if (n < 4) throw Error(Errc::too_few_points, "MIC needs at least 4 points, got " + std::to_string(n));
  for (auto v : {pairs.x(), pairs.y()}) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    if (*lo == *hi) throw Error(Errc::degenerate_range, "MIC input has a constant coordinate");
  }
}

inline void finish(MicResult& result) {
  result.mic = -1.0;
  for (const auto& [dims, value] : result.matrix.entries) {
    if (value > result.mic) {
      result.mic = value;
      result.best_x = dims.first;
      result.best_y = dims.second;
    }
  }
}

}  // namespace detail

/// MIC with the grid-search approximation.
inline MicResult mic(const PairedSeries& pairs, const MicOptions& opts = {}) {
  detail::check_mic_input(pairs);
  const std::size_t n = pairs.size();
  MicResult result;
  result.b_of_n = b_of_n(n);
  const int budget = result.b_of_n;

  // For each equipartitioned bin count, one dynamic program covers every
  // admissible column count at once.
  std::map<std::pair<int, int>, detail::AxisOptimum> along_x, along_y;
  for (int rows = 2;; ++rows) {
    const int cols = max_columns(rows, budget, opts.inclusive_b);
    if (cols < 2) break;
    const auto cap = detail::unit_cap(n, rows, cols, opts);
    auto ox = detail::optimize_axis(pairs.x(), pairs.y(), rows, cols, cap);
    auto oy = detail::optimize_axis(pairs.y(), pairs.x(), rows, cols, cap);
    for (int c = 2; c <= cols; ++c) {
      along_x.emplace(std::pair{c, rows}, std::move(ox[c]));
      along_y.emplace(std::pair{rows, c}, std::move(oy[c]));
    }
  }

  std::map<std::pair<int, int>, GridPartition> grids;
  for (const auto& [dims, ox] : along_x) {
    const auto& oy = along_y.at(dims);
    const double mi = std::max(ox.mi, oy.mi);
    result.matrix.entries[dims] = normalized_mi(mi, dims.first, dims.second);
  }
  detail::finish(result);
  const auto best = std::pair{result.best_x, result.best_y};
  result.best_grid =
      detail::best_of_orientations(pairs, result.best_x, result.best_y, along_x.at(best), along_y.at(best)).grid;
  return result;
}

/// MIC with every resolution maximised by brute_force_max_mi. Reference
/// for samples of at most 20 points.
inline MicResult mic_exhaustive(const PairedSeries& pairs, const MicOptions& opts = {}) {
  detail::check_mic_input(pairs);
  const std::size_t n = pairs.size();
  if (n > kOracleMaxPoints) {
    throw Error(Errc::oracle_limit, "mic_exhaustive is limited to 20 points, got " + std::to_string(n));
  }
  MicResult result;
  result.b_of_n = b_of_n(n);
  for (int x = 2; x <= result.b_of_n; ++x) {
    for (int y = 2; y <= result.b_of_n; ++y) {
      if (!admissible(x, y, result.b_of_n, opts.inclusive_b)) continue;
      if (static_cast<std::size_t>(std::max(x, y)) > n) continue;
      result.matrix.entries[{x, y}] = normalized_mi(brute_force_max_mi(pairs, x, y), x, y);
    }
  }
  detail::finish(result);
  return result;
}

// ---------------------------------------------------------------------------
// Report files

inline void write_report(std::ostream& out, const MicResult& r, char delimiter = '\t') {
  delimited::write_row(out, {"mic", "best_x", "best_y", "b_of_n"}, delimiter);
  delimited::write_row(out,
                       {delimited::format_double(r.mic), std::to_string(r.best_x), std::to_string(r.best_y),
                        std::to_string(r.b_of_n)},
                       delimiter);
}

inline void write_matrix(std::ostream& out, const CharacteristicMatrix& m, char delimiter = '\t') {
  delimited::write_row(out, {"x", "y", "value"}, delimiter);
  for (const auto& [dims, value] : m.entries) {
    delimited::write_row(out, {std::to_string(dims.first), std::to_string(dims.second),
                               delimited::format_double(value)},
                         delimiter);
  }
}

}  // namespace sentimic::mic
