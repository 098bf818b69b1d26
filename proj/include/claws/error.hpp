#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace claws {

enum class ErrorKind {
  NotADivergence,
  NotNormal,
  NotOnSolutionSpace,
  NotConserved,
  NotAMultiplier,
  NotAdjointSymmetry,
  NotASymmetry,
  TrivialMultiplier,
  NotClosed,
  InvalidAnsatz,
  SyntaxError,
  NonPolynomial,
  SessionError,
};

std::string_view error_name(ErrorKind kind);

// Every failure raised by the kernel carries one of the kinds above so that the
// command line front end can report it by name.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace claws
