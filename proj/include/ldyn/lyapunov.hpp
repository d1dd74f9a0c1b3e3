#pragma once

// Largest Lyapunov exponent of a 1-D map, lambda = (1/N) sum log|f'(x_k)|
// over post-transient iterates, and (c, alpha) grid sweeps of it.

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "ldyn/axis.hpp"
#include "ldyn/errors.hpp"
#include "ldyn/maps.hpp"
#include "ldyn/parallel.hpp"

namespace ldyn {

/// Per-term floor for log|f'|; superstable points would otherwise give -inf.
inline constexpr double kLogFloor = -700.0;

enum class LyapunovStatus { Converged, Escaped, ClampedFloorHit };

struct LyapunovEstimate {
  double lambda = 0.0;
  long n_used = 0;
  LyapunovStatus status = LyapunovStatus::Converged;
  /// Iterate index at which the orbit escaped, when status == Escaped.
  std::optional<long> escape_step;
  std::optional<Escape> escape_reason;

  bool escaped() const { return status == LyapunovStatus::Escaped; }
  friend bool operator==(const LyapunovEstimate&, const LyapunovEstimate&) = default;
};

inline LyapunovEstimate lyapunov_exponent(const MapSpec& spec, double x0, long n_iter, long transient) {
  if (transient < 0 || n_iter <= transient) throw ArgumentError("need n_iter > transient >= 0");

  LyapunovEstimate est;
  double sum = 0.0;
  bool clamped = false;
  double x = x0;
  for (long k = 0; k < n_iter; ++k) {
    if (k >= transient) {
      const EvalOutcome d = eval_derivative(spec, x);
      if (!d) {
        est.status = LyapunovStatus::Escaped;
        est.escape_step = k;
        est.escape_reason = d.escape();
        break;
      }
      double term = std::log(std::abs(d.value()));
      if (!(term >= kLogFloor)) {
        term = kLogFloor;
        clamped = true;
      }
      sum += term;
      ++est.n_used;
    }
    const EvalOutcome next = eval_map(spec, x);
    if (!next) {
      // the derivative at x may still have been counted; the orbit ends here
      est.status = LyapunovStatus::Escaped;
      est.escape_step = k;
      est.escape_reason = next.escape();
      break;
    }
    x = next.value();
  }
  est.lambda = est.n_used > 0 ? sum / static_cast<double>(est.n_used) : 0.0;
  if (!est.escaped() && clamped) est.status = LyapunovStatus::ClampedFloorHit;
  return est;
}

struct SweepGrid {
  std::vector<double> c_axis;
  std::vector<double> alpha_axis;
  /// Row-major: cells[i * alpha_axis.size() + j] is (c_axis[i], alpha_axis[j]).
  std::vector<LyapunovEstimate> cells;
  MapSpec base_spec;
  double x0 = 0.0;

  const LyapunovEstimate& at(std::size_t ci, std::size_t aj) const { return cells[ci * alpha_axis.size() + aj]; }

  double escaped_fraction() const {
    if (cells.empty()) return 0.0;
    std::size_t n = 0;
    for (const auto& e : cells) n += e.escaped() ? 1 : 0;
    return static_cast<double>(n) / static_cast<double>(cells.size());
  }
};

inline SweepGrid sweep_grid(const MapSpec& base, const AxisRange& c_range, const AxisRange& alpha_range, double x0,
                            long n_iter, long transient, unsigned workers = 1) {
  c_range.validate("c range");
  alpha_range.validate("alpha range");
  if (alpha_range.lo < 0.0) throw ArgumentError("alpha range must be >= 0");
  if (transient < 0 || n_iter <= transient) throw ArgumentError("need n_iter > transient >= 0");
  base.validate();

  SweepGrid grid;
  grid.c_axis = c_range.values();
  grid.alpha_axis = alpha_range.values();
  grid.base_spec = base;
  grid.x0 = x0;
  grid.cells.resize(grid.c_axis.size() * grid.alpha_axis.size());

  const std::size_t cols = grid.alpha_axis.size();
  for_each_index(grid.cells.size(), workers, [&](std::size_t idx) {
    MapSpec spec = base;
    spec.c = grid.c_axis[idx / cols];
    spec.alpha = grid.alpha_axis[idx % cols];
    grid.cells[idx] = lyapunov_exponent(spec, x0, n_iter, transient);
  });
  return grid;
}

}  // namespace ldyn
