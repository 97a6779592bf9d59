#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zarcons {

enum class ErrorKind {
  InvalidInput,
  UnsupportedFactorization,
  UnsupportedAmbient,
  Unsupported,
  PreconditionViolated,
  BudgetExceeded,
  ConjugateInputs,
};

std::string_view to_string(ErrorKind kind);

/// Every failure surfaced by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace zarcons
