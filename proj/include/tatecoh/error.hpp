#pragma once

#include <stdexcept>
#include <string>

namespace tatecoh {

// Every failure raised by the library carries one of these codes. The C API
// maps them one-to-one onto tc_status values.
enum class ErrorCode {
  MixedFields = 1,
  DivisionByZero,
  NoPrimitiveRoot,
  InvalidField,
  ShapeMismatch,
  NotInvertible,
  NoSolution,
  ParseError,
  ValidationFailed,
  BadCharacteristic,
  DimensionNotOne,
  NotEigenvector,
  NotAutomorphism,
  DegenerateForm,
  RadicalVerificationFailed,
  NotSplitCommutative,
  ExactnessFailure,
  DegreeOutsideWindow,
  IsoUndecided,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tatecoh
