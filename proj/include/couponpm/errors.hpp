#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace couponpm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. line() is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class EmptyNetworkError : public Error {
 public:
  using Error::Error;
};

// Exact enumeration refused because the outcome space is too large.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

class SolverError : public Error {
 public:
  using Error::Error;
};

// A run would exceed its configured memory budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace couponpm
