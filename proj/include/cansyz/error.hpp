#pragma once

#include <stdexcept>
#include <string>

namespace cansyz {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic outside the domain of an operation (inverting zero, bad prime).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A randomized construction step landed in a bad locus; the caller retries.
class ConstructionFailure : public Error {
 public:
  ConstructionFailure(std::string step, const std::string& detail)
      : Error(step + ": " + detail), step_(std::move(step)) {}
  const std::string& step() const noexcept { return step_; }

 private:
  std::string step_;
};

/// A certificate or consistency check did not hold.
class VerificationError : public Error {
 public:
  using Error::Error;
};

/// Time or memory budget exhausted.
class ResourceExhausted : public Error {
 public:
  using Error::Error;
};

/// Inputs outside the supported range (genus cap, variable cap, ...).
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace cansyz
