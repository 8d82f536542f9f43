#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lftreal {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A map was evaluated at a point where its denominator vanishes.
class SingularAt : public Error {
 public:
  explicit SingularAt(const std::string& where)
      : Error("denominator vanishes at " + where) {}
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("determinant is zero") {}
};

/// An operation that needs a nonvanishing denominator on [-1,1] (or the
/// square) received a map whose denominator has a zero there.
class NotBounded : public Error {
 public:
  explicit NotBounded(const std::string& what)
      : Error(what + " is not bounded on [-1,1]") {}
};

class OutOfUnitInterval : public Error {
 public:
  explicit OutOfUnitInterval(const std::string& value)
      : Error(value + " is outside [-1,1]") {}
};

/// Malformed textual input. `offset` is the zero-based character position at
/// which parsing stopped.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error("parse error at offset " + std::to_string(offset) + ": " +
              message),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace lftreal
