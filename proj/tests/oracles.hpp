#pragma once

// Test-only reference computations. Nothing here calls the code paths it is
// used to check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

struct Span {
  double start;
  double end;
};

/// IoU of two unions of spans by counting 0.01 s grid cells (cell midpoints)
/// covered by either or both sides.
inline double grid_iou(const std::vector<Span>& a, const std::vector<Span>& b) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto* side : {&a, &b}) {
    for (const auto& s : *side) {
      lo = std::min(lo, s.start);
      hi = std::max(hi, s.end);
    }
  }
  if (!(hi > lo)) return 0.0;
  const auto covers = [](const std::vector<Span>& v, double t) {
    return std::any_of(v.begin(), v.end(), [t](const Span& s) { return t >= s.start && t <= s.end; });
  };
  long long inter = 0;
  long long uni = 0;
  const long long cells = std::llround((hi - lo) / 0.01);
  for (long long c = 0; c < cells; ++c) {
    const double t = lo + (static_cast<double>(c) + 0.5) * 0.01;
    const bool in_a = covers(a, t);
    const bool in_b = covers(b, t);
    inter += (in_a && in_b) ? 1 : 0;
    uni += (in_a || in_b) ? 1 : 0;
  }
  return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

/// Maximum total similarity over all injections of the smaller side into the
/// larger one (exhaustive).
inline double best_assignment_total(std::size_t rows, std::size_t cols, const std::vector<double>& sim) {
  const bool transpose = rows > cols;
  const std::size_t small = transpose ? cols : rows;
  const std::size_t large = transpose ? rows : cols;
  const auto at = [&](std::size_t s, std::size_t l) { return transpose ? sim[l * cols + s] : sim[s * cols + l]; };
  double best = -std::numeric_limits<double>::infinity();
  std::vector<std::size_t> pick(small);
  std::vector<char> used(large, 0);
  std::function<void(std::size_t, double)> rec = [&](std::size_t s, double acc) {
    if (s == small) {
      best = std::max(best, acc);
      return;
    }
    for (std::size_t l = 0; l < large; ++l) {
      if (used[l]) continue;
      used[l] = 1;
      rec(s + 1, acc + at(s, l));
      used[l] = 0;
    }
  };
  rec(0, 0.0);
  return best;
}

/// Minimum over all ascending k-chains ending at m (1-based) of the sum of
/// q(t_i, t_{i+1}), summed left to right starting from 0.
template <class Q>
double best_chain_cost(std::size_t m, std::size_t k, Q&& q) {
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> chain(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t next_min) {
    if (pos + 1 == k) {
      chain[pos] = m;
      if (pos > 0 && chain[pos - 1] >= m) return;
      double total = 0.0;
      for (std::size_t t = 1; t < k; ++t) total += q(chain[t - 1], chain[t]);
      best = std::min(best, total);
      return;
    }
    for (std::size_t v = next_min; v + (k - pos - 1) <= m; ++v) {
      chain[pos] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 1);
  return best;
}

/// Dyadic value in [-1, 1] with 10 fractional bits, so sums stay exact.
inline double dyadic(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-1024, 1024);
  return d(rng) / 1024.0;
}

}  // namespace oracle
