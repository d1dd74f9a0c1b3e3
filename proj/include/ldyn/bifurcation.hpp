#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ldyn/axis.hpp"
#include "ldyn/errors.hpp"
#include "ldyn/maps.hpp"
#include "ldyn/orbit.hpp"
#include "ldyn/parallel.hpp"

namespace ldyn {

enum class BifurcationParam { C, Alpha, R };

inline std::string_view to_string(BifurcationParam p) {
  switch (p) {
    case BifurcationParam::C: return "c";
    case BifurcationParam::Alpha: return "alpha";
    case BifurcationParam::R: return "r";
  }
  return "?";
}

inline BifurcationParam parse_bifurcation_param(std::string_view s) {
  if (s == "c") return BifurcationParam::C;
  if (s == "alpha") return BifurcationParam::Alpha;
  if (s == "r") return BifurcationParam::R;
  throw ArgumentError("unknown bifurcation parameter '" + std::string(s) + "' (c|alpha|r)");
}

inline void set_param(MapSpec& spec, BifurcationParam p, double v) {
  switch (p) {
    case BifurcationParam::C: spec.c = v; break;
    case BifurcationParam::Alpha: spec.alpha = v; break;
    case BifurcationParam::R: spec.r = v; break;
  }
}

struct BifurcationOptions {
  double x0 = 0.4;
  long n_iter = 50'000;
  long transient = 5'000;
  long samples_per_param = 200;
  double cluster_tol = 1e-4;
  unsigned workers = 1;
};

struct BifurcationData {
  BifurcationParam param = BifurcationParam::R;
  std::vector<double> param_values;
  /// Last samples_per_param iterates per parameter; empty if the orbit escaped.
  std::vector<std::vector<double>> attractor_samples;
  /// Distinct clusters among the samples, 0 for escaped parameters.
  std::vector<long> branch_counts;
};

/// Single-linkage cluster count on the line: sorted values split wherever
/// the gap to the previous value exceeds tol.
inline long count_clusters(std::vector<double> values, double tol) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  long n = 1;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] - values[i - 1] > tol) ++n;
  return n;
}

inline BifurcationData bifurcation_diagram(const MapSpec& base, BifurcationParam param, const AxisRange& range,
                                           const BifurcationOptions& opt = {}) {
  range.validate("parameter range");
  if (opt.samples_per_param < 1) throw ArgumentError("samples_per_param must be >= 1");
  if (opt.transient < 0 || opt.n_iter <= opt.transient + opt.samples_per_param)
    throw ArgumentError("need n_iter > transient + samples_per_param");
  if (!(opt.cluster_tol > 0.0)) throw ArgumentError("cluster tolerance must be > 0");
  if (param == BifurcationParam::R && base.family != MapFamily::Logistic)
    throw ArgumentError("parameter r applies only to the logistic family");

  BifurcationData out;
  out.param = param;
  out.param_values = range.values();
  for (double v : out.param_values) {
    MapSpec spec = base;
    set_param(spec, param, v);
    spec.validate();
  }

  const std::size_t n = out.param_values.size();
  out.attractor_samples.resize(n);
  out.branch_counts.assign(n, 0);
  const long keep_from = opt.n_iter - opt.samples_per_param;

  for_each_index(n, opt.workers, [&](std::size_t i) {
    MapSpec spec = base;
    set_param(spec, param, out.param_values[i]);
    const OrbitRecord orbit = iterate_orbit(spec, opt.x0, opt.n_iter, keep_from);
    if (orbit.escape) return;
    out.attractor_samples[i] = orbit.samples;
    out.branch_counts[i] = count_clusters(orbit.samples, opt.cluster_tol);
  });
  return out;
}

}  // namespace ldyn
