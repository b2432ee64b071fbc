#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropnewton {

enum class ErrorKind {
  DivisionByZero,
  ZeroInput,
  LengthMismatch,
  ZeroPolynomial,
  VariableOutOfScope,
  RingMismatch,
  ZeroConstantTerm,
  DegeneratePolygon,
  ResourceLimit,
  NonConstantValuation,
  NotHomogeneous,
  NotZeroDimensional,
  NotTriangular,
  NoResidueRoot,
  MultipleResidueRoot,
  IrrationalResidueRoot,
  InsufficientPrecision,
  NonTorusVariety,
  ExhaustedAttempts,
  ProjectionCoversSpace,
  NotCombinatoriallyCurve,
  DegenerateSlice,
  SyntaxError,
  UnknownVariable,
  NonPrimeModulus,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this one exception type; the
// kind is what callers (and the CLI exit-code mapping) switch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace tropnewton
