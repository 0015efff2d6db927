#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace martensite {

enum class ErrorCode {
  ZeroPolynomial,
  DegreeTooHigh,
  MixedField,
  DivisionByZero,
  TraceMismatch,
  NotTraceZero,
  InvalidParams,
  DegenerateParams,
  FlatPolytope,
  FamilyNotClosed,
  DependentBasis,
  NotT3,
  MultipleRootsInUnitInterval,
  IncompatibleCenter,
  DegenerateLambda,
  DegenerateT3,
  InsufficientSamples,
  UnknownMaterial,
  ParseError,
  Unsupported,
};

std::string_view to_string(ErrorCode code);

// Single exception type for every contract violation in the library; the CLI
// maps the code onto its error text and exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace martensite
