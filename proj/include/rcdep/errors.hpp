#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rcdep {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed file content. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& file, std::size_t line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};

// Structurally invalid data or configuration (out-of-range values,
// dangling references, violated file-level invariants).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Unknown unit or junction id.
class LookupError : public Error {
 public:
  using Error::Error;
};

// A caller violated an operation's precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

// A pipeline stage was requested before its upstream artifacts exist.
class PrerequisiteError : public Error {
 public:
  using Error::Error;
};

}  // namespace rcdep
