#pragma once

// Newton-Raphson on g(x) = f(x) - x, with fixed points classified by |f'|.

#include <cmath>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ldyn/errors.hpp"
#include "ldyn/maps.hpp"
#include "ldyn/parallel.hpp"

namespace ldyn {

enum class Stability { Stable, Unstable, Marginal };
enum class RootFailure { ZeroDerivative, MaxIterations, EscapedDomain };

inline std::string_view to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::Unstable: return "unstable";
    case Stability::Marginal: return "marginal";
  }
  return "?";
}

inline std::string_view to_string(RootFailure f) {
  switch (f) {
    case RootFailure::ZeroDerivative: return "zero_derivative";
    case RootFailure::MaxIterations: return "max_iterations";
    case RootFailure::EscapedDomain: return "escaped_domain";
  }
  return "?";
}

struct NewtonOptions {
  double tol = 1e-10;
  long max_iter = 200;
  double marginal_band = 1e-6;
};

struct RootReport {
  double guess = 0.0;
  std::optional<double> root;
  /// Number of Newton updates applied.
  long iterations = 0;
  /// |f(x) - x| at the last evaluated iterate.
  double residual = 0.0;
  std::optional<double> derivative_at_root;
  std::optional<Stability> stability;
  std::optional<RootFailure> failure;
  /// Set when the analytic derivative escaped and a central difference was used.
  bool used_fd_fallback = false;
  /// |g| at every evaluated iterate, starting with the guess.
  std::vector<double> residual_history;

  bool converged() const { return root.has_value(); }
};

inline Stability classify_derivative(double derivative, double marginal_band) {
  const double a = std::abs(derivative);
  if (a < 1.0 - marginal_band) return Stability::Stable;
  if (a > 1.0 + marginal_band) return Stability::Unstable;
  return Stability::Marginal;
}

inline Stability classify_stability(const MapSpec& spec, double root, double marginal_band = 1e-6) {
  const EvalOutcome d = eval_derivative(spec, root);
  if (!d) throw DomainViolation("root lies outside the map domain (" + std::string(to_string(d.escape())) + ")");
  return classify_derivative(d.value(), marginal_band);
}

namespace detail {

inline std::optional<double> central_difference(const MapSpec& spec, double x) {
  const double step = 1e-7 * std::max(1.0, std::abs(x));
  const EvalOutcome hi = eval_map(spec, x + step);
  const EvalOutcome lo = eval_map(spec, x - step);
  if (!hi || !lo) return std::nullopt;
  return (hi.value() - lo.value()) / (2.0 * step);
}

}  // namespace detail

inline RootReport newton_solve(const MapSpec& spec, double guess, const NewtonOptions& opt = {}) {
  if (!(opt.tol > 0.0)) throw ArgumentError("tolerance must be > 0");
  if (opt.max_iter < 1) throw ArgumentError("max_iter must be >= 1");

  RootReport rep;
  rep.guess = guess;
  double x = guess;
  for (long it = 0;; ++it) {
    const EvalOutcome fx = eval_map(spec, x);
    if (!fx) {
      rep.failure = RootFailure::EscapedDomain;
      return rep;
    }
    const double g = fx.value() - x;
    rep.residual = std::abs(g);
    rep.residual_history.push_back(rep.residual);

    EvalOutcome d = eval_derivative(spec, x);
    std::optional<double> fprime;
    if (d) {
      fprime = d.value();
    } else {
      fprime = detail::central_difference(spec, x);
      rep.used_fd_fallback = true;
    }

    if (rep.residual <= opt.tol) {
      if (!fprime) {
        rep.failure = RootFailure::EscapedDomain;
        return rep;
      }
      rep.root = x;
      rep.derivative_at_root = *fprime;
      rep.stability = classify_derivative(*fprime, opt.marginal_band);
      return rep;
    }
    if (it >= opt.max_iter) {
      rep.failure = RootFailure::MaxIterations;
      return rep;
    }
    if (!fprime) {
      rep.failure = RootFailure::EscapedDomain;
      return rep;
    }
    const double gprime = *fprime - 1.0;
    if (std::abs(gprime) < 1e-14) {
      rep.failure = RootFailure::ZeroDerivative;
      return rep;
    }
    x -= g / gprime;
    rep.iterations = it + 1;
    if (!std::isfinite(x)) {
      rep.failure = RootFailure::EscapedDomain;
      return rep;
    }
  }
}

/// One report per guess, in input order.
inline std::vector<RootReport> guess_sweep(const MapSpec& spec, std::span<const double> guesses,
                                           const NewtonOptions& opt = {}, unsigned workers = 1) {
  std::vector<RootReport> out(guesses.size());
  for_each_index(guesses.size(), workers, [&](std::size_t i) { out[i] = newton_solve(spec, guesses[i], opt); });
  return out;
}

}  // namespace ldyn
