#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace truncvar {

enum class ErrorCode {
  EmptyInput,
  LengthMismatch,
  NonMonotoneTimes,
  NonFiniteValue,
  InvalidLevel,
  DomainError,
  StaleDecomposition,
  InvalidGrid,
  InvalidSpec,
  UnknownKind,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every precondition violation in the library surfaces as this exception.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace truncvar
