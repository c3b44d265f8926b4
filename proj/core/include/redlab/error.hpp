#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace redlab {

enum class ErrorCode {
  SingularMatrix,
  NotSymmetric,
  DimensionMismatch,
  BadFraction,
  InvalidInput,
  NotConnected,
  WeightTooSmall,
  NotNegativeDefinite,
  Multigraph,
  NegativeDiscrepancy,
  UnknownPoint,
  NotRedundant,
  UnboundedAtPoint,
  IndexOutOfRange,
  NotPseudoEffective,
  BadParameters,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (and the CLI) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace redlab
