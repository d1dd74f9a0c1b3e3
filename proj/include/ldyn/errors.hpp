#pragma once

#include <stdexcept>
#include <string>

namespace ldyn {

/// Invalid lengths, ranges or option values passed to an operation.
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// A point or parameter lies outside the real domain of the formula.
class DomainViolation : public std::domain_error {
 public:
  explicit DomainViolation(const std::string& what) : std::domain_error(what) {}
};

/// Even-parity L(1, chi) needs a fundamental unit epsilon > 1.
class MissingFundamentalUnit : public std::invalid_argument {
 public:
  explicit MissingFundamentalUnit(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace ldyn
