// errors.hpp -- exception hierarchy shared by all modules
#pragma once

#include <stdexcept>
#include <string>

namespace roughmatroid {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// construction errors for approximation spaces
class EmptyUniverseError : public Error {
 public:
  using Error::Error;
};

class OverlapError : public Error {
 public:
  using Error::Error;
};

class CoverageError : public Error {
 public:
  using Error::Error;
};

class EmptyBlockError : public Error {
 public:
  using Error::Error;
};

class OutOfUniverseError : public Error {
 public:
  using Error::Error;
};

/// Two values built over different universes were combined.
class UniverseMismatchError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive check was requested on a universe above its cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// A family offered as matroid independents violates I1, I2 or I3.
class AxiomError : public Error {
 public:
  AxiomError(std::string axiom, const std::string& what)
      : Error(what), axiom_(std::move(axiom)) {}
  const std::string& axiom() const { return axiom_; }

 private:
  std::string axiom_;
};

class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

class UnknownElementError : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree by construction disagreed; always a bug.
class InternalMismatchError : public Error {
 public:
  using Error::Error;
};

/// Parse error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

class SemanticError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace roughmatroid
