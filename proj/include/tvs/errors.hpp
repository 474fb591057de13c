#pragma once

#include <stdexcept>
#include <string>

namespace tvs {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Raised when a divisor genuinely depends on a (only a-monomials may be inverted).
struct NonInvertibleDenominator : std::domain_error {
  explicit NonInvertibleDenominator(const std::string& what)
      : std::domain_error("non-invertible denominator: " + what) {}
};

struct PoleAtEvaluationPoint : std::domain_error {
  explicit PoleAtEvaluationPoint(const std::string& what)
      : std::domain_error("pole at evaluation point: " + what) {}
};

struct NonNilpotentArgument : std::domain_error {
  NonNilpotentArgument()
      : std::domain_error("plethystic exponential of an argument with a degree-0 part") {}
};

struct NonUnitClosedSector : std::domain_error {
  NonUnitClosedSector()
      : std::domain_error("closed-sector series is not invertible under truncation") {}
};

struct InvalidInput : std::invalid_argument {
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace tvs
