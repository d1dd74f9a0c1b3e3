#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ldyn/errors.hpp"

namespace ldyn {

struct Histogram {
  std::vector<double> edges;  // bins + 1, strictly increasing
  std::vector<long> counts;
  long total = 0;

  std::size_t bins() const { return counts.size(); }
  double center(std::size_t i) const { return 0.5 * (edges[i] + edges[i + 1]); }
};

struct ShannonEntropy {
  double raw = 0.0;  // nats
  double normalized = 0.0;
};

struct UnimodalityResult {
  bool is_unimodal = false;
  std::optional<double> mode_center;
};

/// Equal-width histogram. Without an explicit range the bins cover
/// [min, max] with the upper edge pushed out by a 1e-9 relative margin so the
/// maximum lands inside the last bin. With an explicit range, values outside
/// [lo, hi] are not counted.
inline Histogram histogram(std::span<const double> values, long bins,
                           std::optional<std::pair<double, double>> range = std::nullopt) {
  if (bins < 1) throw ArgumentError("bins must be >= 1");
  if (values.empty()) throw ArgumentError("histogram of an empty sample");
  for (double v : values)
    if (!std::isfinite(v)) throw ArgumentError("histogram values must be finite");

  double lo, hi;
  if (range) {
    std::tie(lo, hi) = *range;
    if (!(lo < hi)) throw ArgumentError("histogram range needs lo < hi");
  } else {
    const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    lo = *mn;
    hi = *mx;
    const double margin = 1e-9 * std::max({hi - lo, std::abs(lo), std::abs(hi), 1.0});
    if (hi == lo) lo -= margin;
    hi += margin;
  }

  Histogram h;
  const auto k = static_cast<std::size_t>(bins);
  h.edges.resize(k + 1);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t i = 0; i < k; ++i) h.edges[i] = lo + width * static_cast<double>(i);
  h.edges[k] = hi;
  h.counts.assign(k, 0);

  for (double v : values) {
    if (v < lo || v > hi) continue;
    auto idx = static_cast<std::size_t>(std::floor((v - lo) / width));
    if (idx >= k) idx = k - 1;
    ++h.counts[idx];
    ++h.total;
  }
  return h;
}

/// -sum p log p over nonzero bins, and the same divided by log(bins).
inline ShannonEntropy shannon_entropy(const Histogram& hist) {
  if (hist.total < 1) throw ArgumentError("entropy of an empty histogram");
  ShannonEntropy e;
  const double n = static_cast<double>(hist.total);
  for (long c : hist.counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    e.raw -= p * std::log(p);
  }
  if (e.raw < 0.0) e.raw = 0.0;
  e.normalized = hist.bins() > 1 ? e.raw / std::log(static_cast<double>(hist.bins())) : 0.0;
  return e;
}

/// Sum of the strictly positive exponents. Positives are summed in sorted
/// order so the result does not depend on input order.
inline double pesin_entropy(std::span<const double> lambdas) {
  if (lambdas.empty()) throw ArgumentError("pesin_entropy of an empty list");
  std::vector<double> pos;
  for (double l : lambdas)
    if (l > 0.0) pos.push_back(l);
  std::sort(pos.begin(), pos.end());
  double s = 0.0;
  for (double l : pos) s += l;
  return s;
}

/// Centered moving average; windows are truncated at the edges.
inline std::vector<double> smooth_counts(std::span<const long> counts, long window) {
  if (window < 1 || window % 2 == 0) throw ArgumentError("smoothing window must be odd and >= 1");
  const long n = static_cast<long>(counts.size());
  const long half = window / 2;
  std::vector<double> out(counts.size());
  for (long i = 0; i < n; ++i) {
    const long a = std::max(0L, i - half);
    const long b = std::min(n - 1, i + half);
    double s = 0.0;
    for (long j = a; j <= b; ++j) s += static_cast<double>(counts[j]);
    out[i] = s / static_cast<double>(b - a + 1);
  }
  return out;
}

/// Unimodal when the smoothed counts are non-decreasing up to one contiguous
/// maximal plateau and non-increasing after it. mode_center is the midpoint
/// of that plateau.
inline UnimodalityResult unimodality_check(const Histogram& hist, long smoothing_window = 1) {
  const std::vector<double> s = smooth_counts(hist.counts, smoothing_window);
  UnimodalityResult res;
  if (s.empty()) return res;

  const double peak = *std::max_element(s.begin(), s.end());
  const double eps = 1e-12 * std::max(1.0, peak);
  auto is_peak = [&](double v) { return v >= peak - eps; };

  std::size_t first = 0;
  while (!is_peak(s[first])) ++first;
  std::size_t last = first;
  while (last + 1 < s.size() && is_peak(s[last + 1])) ++last;
  for (std::size_t i = last + 1; i < s.size(); ++i)
    if (is_peak(s[i])) return res;

  for (std::size_t i = 1; i <= first; ++i)
    if (s[i] + eps < s[i - 1]) return res;
  for (std::size_t i = last + 1; i < s.size(); ++i)
    if (s[i] > s[i - 1] + eps) return res;

  res.is_unimodal = true;
  res.mode_center = 0.5 * (hist.edges[first] + hist.edges[last + 1]);
  return res;
}

}  // namespace ldyn
