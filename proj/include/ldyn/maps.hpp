#pragma once

// The three map families: the odd- and even-character L-function maps and
// the logistic map used as an analytic reference.
//
//   odd:      f(x) = beta / sqrt(x) + c * P(log x)
//   even:     f(x) = beta * log(eps) / (pi * sqrt(x)) + c * P(log x)
//   logistic: f(x) = r * x * (1 - x)
//
// with beta = 2*pi*h/w and the signed power P(y) = sign(y) * |y|^(-alpha).
// P keeps orbits real when they pass through 0 < x < 1, where log x < 0 and
// a real power with non-integer exponent is undefined.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "ldyn/errors.hpp"

namespace ldyn {

enum class MapFamily { OddDynamics, EvenDynamics, Logistic };

enum class Escape { DomainViolation, LogPole, Overflow };

inline std::string_view to_string(MapFamily f) {
  switch (f) {
    case MapFamily::OddDynamics: return "odd";
    case MapFamily::EvenDynamics: return "even";
    case MapFamily::Logistic: return "logistic";
  }
  return "?";
}

inline std::string_view to_string(Escape e) {
  switch (e) {
    case Escape::DomainViolation: return "domain";
    case Escape::LogPole: return "logpole";
    case Escape::Overflow: return "overflow";
  }
  return "?";
}

inline MapFamily parse_family(std::string_view s) {
  if (s == "odd") return MapFamily::OddDynamics;
  if (s == "even") return MapFamily::EvenDynamics;
  if (s == "logistic") return MapFamily::Logistic;
  throw ArgumentError("unknown map family '" + std::string(s) + "' (odd|even|logistic)");
}

struct MapSpec {
  MapFamily family = MapFamily::OddDynamics;
  long h = 1;
  long w = 2;
  double epsilon = std::numbers::phi;
  double c = 0.0;
  double alpha = 0.0;
  double r = 4.0;
  /// Replaces 2*pi*h/w when set.
  std::optional<double> beta_override;
  double escape_bound = 1e100;

  double beta() const {
    if (beta_override) return *beta_override;
    return 2.0 * std::numbers::pi * static_cast<double>(h) / static_cast<double>(w);
  }

  /// Coefficient of 1/sqrt(x): beta, or beta*log(eps)/pi for the even family.
  double sqrt_coefficient() const {
    if (family == MapFamily::EvenDynamics) return beta() * std::log(epsilon) / std::numbers::pi;
    return beta();
  }

  void validate() const {
    if (h < 1 || w < 1) throw ArgumentError("h and w must be positive");
    if (beta_override) {
      if (!(*beta_override >= 0.0) || !std::isfinite(*beta_override))
        throw ArgumentError("beta override must be finite and >= 0");
    }
    if (!std::isfinite(c)) throw ArgumentError("c must be finite");
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw ArgumentError("alpha must be finite and >= 0");
    if (!(escape_bound > 0.0)) throw ArgumentError("escape bound must be > 0");
    if (family == MapFamily::EvenDynamics && !(epsilon > 1.0))
      throw ArgumentError("even family requires epsilon > 1");
    if (family == MapFamily::Logistic && !(r > 0.0 && r <= 4.0))
      throw ArgumentError("logistic family requires 0 < r <= 4");
  }
};

/// Either a finite value or the reason the evaluation left the real domain.
class EvalOutcome {
 public:
  static EvalOutcome of(double v) { return EvalOutcome(v); }
  static EvalOutcome escaped(Escape e) { return EvalOutcome(e); }

  bool has_value() const { return std::holds_alternative<double>(state_); }
  explicit operator bool() const { return has_value(); }
  double value() const { return std::get<double>(state_); }
  Escape escape() const { return std::get<Escape>(state_); }

  friend bool operator==(const EvalOutcome&, const EvalOutcome&) = default;

 private:
  explicit EvalOutcome(double v) : state_(v) {}
  explicit EvalOutcome(Escape e) : state_(e) {}
  std::variant<double, Escape> state_;
};

/// sign(y) * |y|^(-alpha); P(0) = 0.
inline double signed_power(double y, double alpha) {
  if (y == 0.0) return 0.0;
  const double mag = std::pow(std::abs(y), -alpha);
  return y > 0.0 ? mag : -mag;
}

namespace detail {

inline std::optional<Escape> check_input(const MapSpec& spec, double x) {
  if (std::isnan(x)) return Escape::DomainViolation;
  if (spec.family == MapFamily::Logistic) return std::nullopt;
  if (!(x > 0.0)) return Escape::DomainViolation;
  if (x == 1.0 && spec.alpha > 0.0) return Escape::LogPole;
  return std::nullopt;
}

inline EvalOutcome bounded(const MapSpec& spec, double v) {
  if (!std::isfinite(v) || std::abs(v) > spec.escape_bound) return EvalOutcome::escaped(Escape::Overflow);
  return EvalOutcome::of(v);
}

}  // namespace detail

inline EvalOutcome eval_map(const MapSpec& spec, double x) {
  if (auto e = detail::check_input(spec, x)) return EvalOutcome::escaped(*e);
  if (spec.family == MapFamily::Logistic) return detail::bounded(spec, spec.r * x * (1.0 - x));
  const double v = spec.sqrt_coefficient() / std::sqrt(x) + spec.c * signed_power(std::log(x), spec.alpha);
  return detail::bounded(spec, v);
}

/// Analytic f'(x). For the L-function families:
///   -k / (2 x^{3/2}) - c * alpha * |log x|^(-alpha-1) / x
/// where k is the 1/sqrt(x) coefficient.
inline EvalOutcome eval_derivative(const MapSpec& spec, double x) {
  if (auto e = detail::check_input(spec, x)) return EvalOutcome::escaped(*e);
  if (spec.family == MapFamily::Logistic) return detail::bounded(spec, spec.r * (1.0 - 2.0 * x));
  const double k = spec.sqrt_coefficient();
  double v = -k / (2.0 * x * std::sqrt(x));
  const double y = std::log(x);
  if (spec.c != 0.0 && spec.alpha != 0.0 && y != 0.0)
    v -= spec.c * spec.alpha * std::pow(std::abs(y), -spec.alpha - 1.0) / x;
  return detail::bounded(spec, v);
}

}  // namespace ldyn
