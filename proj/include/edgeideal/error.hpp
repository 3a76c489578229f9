#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edgeideal {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied value violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A computation was refused because its input exceeds the desk-scale guard.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// A result was requested for a graph that does not satisfy the hypothesis of
// the result being applied. `result()` names the result.
class HypothesisError : public Error {
 public:
  HypothesisError(std::string result, const std::string& what)
      : Error(result + ": " + what), result_(std::move(result)) {}
  const std::string& result() const noexcept { return result_; }

 private:
  std::string result_;
};

// An inequality that the cactus bound derivation guarantees failed to hold.
// Always indicates a bug.
class TraceAssertionError : public Error {
 public:
  using Error::Error;
};

// A bounded search ran out of budget before finding an answer.
class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Exact integer arithmetic left the range of the coefficient type.
class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace edgeideal
