#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hanoi {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Problem parameters outside their domain (n < 1, p < 3, peg out of range...).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

class InvalidPegError : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

// A move was applied that is not legal in the current state.
class IllegalMoveError : public Error {
public:
  using Error::Error;
};

// Concatenation of paths whose junction states differ.
class PathMismatchError : public Error {
public:
  using Error::Error;
};

// An exact value does not fit the representation requested by the caller.
class OverflowError : public Error {
public:
  using Error::Error;
};

// Packed state code outside [0, p^n).
class RangeError : public Error {
public:
  using Error::Error;
};

// The exhaustive search would need more memory than the configured budget.
class BudgetExceededError : public Error {
public:
  BudgetExceededError(std::uint64_t required_bytes, std::uint64_t budget_bytes,
                      const std::string& what)
      : Error(what), required_bytes_(required_bytes), budget_bytes_(budget_bytes) {}

  std::uint64_t required_bytes() const noexcept { return required_bytes_; }
  std::uint64_t budget_bytes() const noexcept { return budget_bytes_; }

private:
  std::uint64_t required_bytes_;
  std::uint64_t budget_bytes_;
};

}  // namespace hanoi
