#pragma once

#include <stdexcept>
#include <string>

namespace rdrd {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A value violates a documented constraint (family parameters, labels, sizes).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Malformed text input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
  ParseError(const std::string& message, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  [[nodiscard]] int line() const noexcept { return line_; }

private:
  int line_;
};

/// A closed form, bound or construction was asked for outside its hypotheses.
class InapplicableError : public Error {
public:
  using Error::Error;
};

/// An exact method refused an instance above its size limit.
class LimitError : public Error {
public:
  using Error::Error;
};

}  // namespace rdrd
