#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nodebal {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance or plan text. Line numbers are 1-based; 0 means the
// problem is not tied to a single line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Violated precondition or type invariant.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A configured size, enumeration, or search budget would be exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Infeasible b-matching with no verifiable violating set available.
class WitnessUnavailable : public Error {
 public:
  using Error::Error;
};

}  // namespace nodebal
