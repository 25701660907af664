#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lienil {

enum class ErrorKind {
  NotAssociative,
  NoIdentity,
  NoInverse,
  CapExceeded,
  NotAutomorphism,
  NotHomomorphism,
  NotNilpotent,
  NotNormal,
  NotAbelian,
  NotCentral,
  NotLieNilpotent,
  IndexNotPPower,
  OracleCapExceeded,
  NoConvergence,
  DimensionMismatch,
  ParseError,
  UnknownConstruction,
  UnresolvedReference,
  NoWitnessFound,
  InvalidArgument,
  Internal,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (and tests)
// can dispatch on it without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lienil
