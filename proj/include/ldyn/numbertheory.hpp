#pragma once

// Closed-form L(1, chi) for real primitive characters and the log-space
// lower / zero-free bounds built on top of it.

#include <cmath>
#include <numbers>
#include <optional>

#include "ldyn/errors.hpp"

namespace ldyn {

enum class Parity : int { Odd = -1, Even = +1 };

struct LFunctionInputs {
  Parity parity = Parity::Odd;
  long h = 1;  // class number
  long w = 2;  // roots of unity in the field
  long m = 3;  // modulus
  std::optional<double> epsilon;  // fundamental unit, even parity only
};

struct BoundInputs {
  double modulus = std::numbers::e;  // D or q
  double constant = 1.0;             // c1 / C1 / C2
  double exponent = 1.0;             // A
};

inline void validate(const LFunctionInputs& in) {
  if (in.h < 1) throw ArgumentError("class number h must be >= 1");
  if (in.w < 1) throw ArgumentError("w must be >= 1");
  if (in.m < 3) throw ArgumentError("modulus m must be >= 3");
  if (in.parity == Parity::Even && !(in.epsilon && *in.epsilon > 1.0))
    throw MissingFundamentalUnit("even parity requires a fundamental unit epsilon > 1");
}

/// 2*pi*h / (w*sqrt m) for odd characters, 2*h*log(epsilon) / (w*sqrt m) for
/// even ones. The even branch is kept exactly in this form; the classical
/// class number formula has h*log(epsilon)/sqrt(m) there.
inline double dirichlet_l_at_1(const LFunctionInputs& in) {
  validate(in);
  const double denom = static_cast<double>(in.w) * std::sqrt(static_cast<double>(in.m));
  const double h = static_cast<double>(in.h);
  if (in.parity == Parity::Odd) return 2.0 * std::numbers::pi * h / denom;
  return 2.0 * h * std::log(std::abs(*in.epsilon)) / denom;
}

namespace detail {
inline double log_log_modulus(const BoundInputs& in) {
  if (!(in.modulus > 1.0)) throw DomainViolation("bound modulus must be > 1");
  if (!(in.constant > 0.0)) throw ArgumentError("bound constant must be > 0");
  return std::log(std::log(in.modulus));
}
}  // namespace detail

/// log of constant * (log modulus)^(-exponent). Stays finite where the bound
/// itself underflows (exponent 2022).
inline double log_lower_bound(const BoundInputs& in) {
  const double ll = detail::log_log_modulus(in);
  return std::log(in.constant) - in.exponent * ll;
}

/// log of constant * (log modulus)^(-exponent - 2).
inline double log_zero_free_bound(const BoundInputs& in) {
  BoundInputs shifted = in;
  shifted.exponent = in.exponent + 2.0;
  return log_lower_bound(shifted);
}

}  // namespace ldyn
