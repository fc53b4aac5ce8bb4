#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skelefib {

enum class ErrorCode {
  // lattice
  NotCoprime,
  NotSquare,
  NotUnimodular,
  EmptyInput,
  DimensionMismatch,
  SingularLattice,
  // fan
  ZeroHeightRay,
  NonPositiveHeight,
  // degeneration
  UnknownFace,
  InvalidModel,
  MissingCurveData,
  PostconditionViolated,
  NotASurfaceModel,
  DegenerateQuad,
  InvalidCurveData,
  // syz
  NormalizationError,
  NonPositiveValuation,
  NonPositiveB,
  NotLogCalabiYau,
  NotReduced,
  LabelMismatch,
  NonUnimodularTransition,
  BrokenCycle,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Domain failure. The CLI maps these to exit status 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed model file. The CLI maps these to exit status 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace skelefib
