#pragma once

#include <stdexcept>
#include <string>

namespace hyperlat {

// Base of every error thrown by the library. `code` is a stable
// machine-readable tag, `reason` names the mathematical assertion involved.
class Error : public std::runtime_error {
 public:
  Error(std::string code, std::string reason)
      : std::runtime_error(code + ": " + reason),
        code_(std::move(code)),
        reason_(std::move(reason)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string code_;
  std::string reason_;
};

// Malformed documents or arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

// A precondition or domain restriction of an operation does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Integer arithmetic left the int64 range.
class OverflowError : public DomainError {
 public:
  explicit OverflowError(std::string what)
      : DomainError("overflow", std::move(what)) {}
};

// A statement that is a theorem for valid inputs failed. Firing this is a bug
// in the library or in the validation of its inputs.
class TheoremViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace hyperlat
