#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "ldyn/errors.hpp"

namespace ldyn {

/// Closed range [lo, hi] sampled at `count` equally spaced points.
struct AxisRange {
  double lo = 0.0;
  double hi = 0.0;
  long count = 1;

  void validate(const std::string& name) const {
    if (count < 1) throw ArgumentError(name + ": count must be >= 1");
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw ArgumentError(name + ": bounds must be finite");
    if (count > 1 && !(lo < hi)) throw ArgumentError(name + ": need lo < hi when count > 1");
  }

  /// Point i; the last point is exactly hi.
  double at(long i) const {
    if (count == 1) return lo;
    if (i == count - 1) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }

  std::vector<double> values() const {
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) v.push_back(at(i));
    return v;
  }
};

}  // namespace ldyn
