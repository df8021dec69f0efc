#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace okalab {

/// Machine-readable failure codes, serialized by to_string().
enum class ErrorCode {
  DivisionByZero,
  DimensionMismatch,
  MalformedScalar,
  MalformedDocument,
  ZeroForm,
  DuplicateHyperplane,
  LengthMismatch,
  PointOnArrangement,
  PointInBaseLocus,
  CircuitMismatch,
  RangeError,
  PreconditionViolated,
  CommonFactor,
  BothZero,
  ZeroSample,
  UnderResolvedLoop,
  AllSamplesSkipped,
  CommonZero,
  FileNotFound,
  UsageError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace okalab
