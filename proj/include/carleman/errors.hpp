#pragma once

#include <stdexcept>
#include <string>

namespace carleman {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDimension : public Error {
 public:
  using Error::Error;
};

// Argument outside the range an evaluator supports.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Parameters for which a constant or operator is undefined.
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidExponent : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidDomain : public Error {
 public:
  using Error::Error;
};

class SingularEvaluation : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

// Plain-real conversion of a log-space value that would overflow/underflow.
class NotRepresentable : public Error {
 public:
  using Error::Error;
};

class TailBoundError : public Error {
 public:
  TailBoundError(const std::string& what, int suggested)
      : Error(what), suggested_truncation(suggested) {}
  int suggested_truncation;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line_no, int column)
      : Error(what), line(line_no), col(column) {}
  int line;
  int col;
};

}  // namespace carleman
