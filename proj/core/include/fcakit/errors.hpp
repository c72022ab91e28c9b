#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fcakit {

// Bad input or violated operation contract. Maps to CLI exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied value breaks a documented precondition.
class PreconditionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Work refused because a configured cap would be exceeded. Maps to CLI exit code 2.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parse failure carrying a 1-based line number.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& msg, std::size_t line)
      : ValidationError(msg + " (line " + std::to_string(line) + ")"), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace fcakit
