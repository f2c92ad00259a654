#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace dscsib {

/// Library error with a stable machine-readable code.
///
/// Codes are part of the public contract and are rendered verbatim by the
/// CLI: EmptyAggregate, Overflow, InvalidOrdinal, SingleSibling, Unsupported,
/// TooManyClasses, NotCountable, ConditionFails, NotBounded, NoStrictFamily,
/// FiniteJ, AbsentTarget, CapExceeded, ParseError, UnknownDeclared,
/// ZeroMultiplicity, InvalidArgument.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
  throw Error(std::move(code), message);
}

}  // namespace dscsib
