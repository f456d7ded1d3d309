#pragma once

#include <stdexcept>
#include <string>

namespace secular {

enum class ErrorKind {
  OrderMismatch,
  ZeroPolynomial,
  DivisionByZero,
  InexactDivision,
  Parse,
  Degenerate,
  DimensionTooSmall,
  InvalidModel,
  DuplicateState,
  InvalidArgument,
  NonConvergence,
  NoExceptionalPoint,
  TooFewCoefficients,
  OracleConvergence,
};

const char* to_string(ErrorKind kind);

/// Base of every error raised by the library. The kind is what callers
/// dispatch on (the CLI maps it to an exit status).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace secular
