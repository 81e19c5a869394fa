#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vee {

enum class ErrorCode {
  SingularMatrix,
  ZeroCovector,
  ZeroMultiplicity,
  DuplicateCovector,
  DimensionMismatch,
  DegenerateForm,
  FunctionalVanishes,
  SingularPoint,
  ZeroLambda,
  SamplingExhausted,
  OutOfDomain,
  CollinearPair,
  NonScalarAction,
  SpanDeficient,
  DegenerateParametrization,
  UnknownName,
  InvalidParams,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; the code identifies the failure.
class VeeError : public std::runtime_error {
 public:
  VeeError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vee
