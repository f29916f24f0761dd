#pragma once

#include <stdexcept>
#include <string>

namespace ordcal {

// Base class for every error the engines raise on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// Raised by the degree-2 quantization table when fed a higher-degree
// polynomial.  This boundary is load-bearing: the table cannot be extended.
struct DegreeExceeded : Error {
  using Error::Error;
};

// Malformed abstract-index structure (repeated free index, dummy with
// mismatched variance, free-index set differing between terms, ...).
struct IndexError : Error {
  using Error::Error;
};

// A flat-only operation met a curved derivative, or vice versa.
struct WrongConnection : Error {
  using Error::Error;
};

// A homomorphism check needed the image of a bracket the assignment table
// does not cover.
struct MissingAssignment : Error {
  using Error::Error;
};

// Bad constraint rule set: non-decreasing measure or runaway rewriting.
struct ConstraintError : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line = 0;
  int column = 0;
  ParseError(const std::string& what, int line_, int column_)
      : Error(what + " at " + std::to_string(line_) + ":" + std::to_string(column_)),
        line(line_),
        column(column_) {}
};

// Component-evaluation failures: singular metric, unbound symbol, ...
struct OracleError : Error {
  using Error::Error;
};

}  // namespace ordcal
