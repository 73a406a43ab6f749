#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace metlie {

enum class ErrorCode {
  DimensionMismatch,
  NonSquare,
  NonSymmetric,
  InvalidBracket,
  JacobiViolation,
  NonSolvable,
  NotAnIdeal,
  DegenerateForm,
  NotIsotropic,
  NotCentral,
  Abelian,
  NotSkew,
  NotDerivation,
  NotInvariant,
  NotNilInvariant,
  NoRationalIsotropicVector,
  InvalidPairing,
  InvalidParams,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// front ends can map it to a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace metlie
