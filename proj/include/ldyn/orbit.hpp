#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "ldyn/errors.hpp"
#include "ldyn/maps.hpp"

namespace ldyn {

struct EscapeEvent {
  /// Index k of the iterate x_k whose image escaped (x_0 is the start point).
  long step = 0;
  Escape reason = Escape::DomainViolation;
};

/// Trajectory x_1, x_2, ... of x_{k+1} = f(x_k). samples holds the iterates
/// x_k with k > transient_len, in order; samples[i] is x_{transient_len + 1 + i}.
struct OrbitRecord {
  double x0 = 0.0;
  std::vector<double> samples;
  long transient_len = 0;
  long total_iterations = 0;
  std::optional<EscapeEvent> escape;

  /// Iterate index of samples[i].
  long index_of(std::size_t i) const { return transient_len + 1 + static_cast<long>(i); }
};

struct CycleReport {
  std::optional<int> period;
  /// One period of the cycle, rotated so the smallest point comes first.
  std::vector<double> points;
  double tolerance = 0.0;
};

inline OrbitRecord iterate_orbit(const MapSpec& spec, double x0, long n_iter, long transient) {
  if (n_iter < 1) throw ArgumentError("n_iter must be >= 1");
  if (transient < 0 || transient >= n_iter) throw ArgumentError("transient must satisfy 0 <= transient < n_iter");

  OrbitRecord rec;
  rec.x0 = x0;
  rec.transient_len = transient;
  rec.total_iterations = n_iter;
  rec.samples.reserve(static_cast<std::size_t>(n_iter - transient));

  double x = x0;
  for (long k = 0; k < n_iter; ++k) {
    const EvalOutcome next = eval_map(spec, x);
    if (!next) {
      rec.escape = EscapeEvent{k, next.escape()};
      break;
    }
    x = next.value();
    if (k + 1 > transient) rec.samples.push_back(x);
  }
  return rec;
}

/// Smallest period p <= max_period such that |x_{n+p} - x_n| < tol over the
/// tail of the orbit. The tail is the second half of the samples, but never
/// shorter than 2 * max_period.
inline CycleReport detect_cycle(const OrbitRecord& orbit, int max_period, double tol) {
  if (max_period < 1) throw ArgumentError("max_period must be >= 1");
  if (!(tol > 0.0)) throw ArgumentError("tolerance must be > 0");
  const auto& s = orbit.samples;
  const std::size_t need = 2 * static_cast<std::size_t>(max_period);
  if (s.size() < need) throw ArgumentError("detect_cycle needs at least 2 * max_period samples");

  CycleReport report;
  report.tolerance = tol;
  const std::size_t tail = std::max(need, (s.size() + 1) / 2);
  const std::size_t start = s.size() - tail;

  for (int p = 1; p <= max_period; ++p) {
    bool ok = true;
    for (std::size_t n = start; n + static_cast<std::size_t>(p) < s.size(); ++n) {
      if (!(std::abs(s[n + p] - s[n]) < tol)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    report.period = p;
    report.points.assign(s.end() - p, s.end());
    auto lowest = std::min_element(report.points.begin(), report.points.end());
    std::rotate(report.points.begin(), lowest, report.points.end());
    break;
  }
  return report;
}

}  // namespace ldyn
