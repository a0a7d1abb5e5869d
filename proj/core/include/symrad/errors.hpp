#pragma once

#include <stdexcept>
#include <string>

namespace symrad {

// Root of every error raised by the library. Each subclass names one
// failure mode so callers can dispatch with a catch clause.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SYMRAD_DECLARE_ERROR(Name)        \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

// Operands live over different unknown tables (e.g. x,y versus s1,s2).
SYMRAD_DECLARE_ERROR(SymbolMismatch);
// A numeric evaluation hit a symbol with no value.
SYMRAD_DECLARE_ERROR(UnboundSymbol);
// Exact division left a nonzero remainder.
SYMRAD_DECLARE_ERROR(NotDivisible);
// An operation needs positive (or bounded) degree in some unknown.
SYMRAD_DECLARE_ERROR(DegreeError);
// Input outside an operation's mathematical domain.
SYMRAD_DECLARE_ERROR(DomainError);
// Polynomial in the wrong number of unknowns for a symmetry test.
SYMRAD_DECLARE_ERROR(ArityError);
// Polynomial has the wrong symmetry class for the requested operation.
SYMRAD_DECLARE_ERROR(ClassError);
// Problem has more equations or unknowns than the solver supports.
SYMRAD_DECLARE_ERROR(UnsupportedShape);
// Symmetric system whose sigma form has no equation linear in sigma2.
SYMRAD_DECLARE_ERROR(UnsupportedStructure);
// Univariate degree outside 1..4 handed to the radical solver.
SYMRAD_DECLARE_ERROR(NotSolvableHere);
// Division by a value that vanished numerically.
SYMRAD_DECLARE_ERROR(NumericSingularity);
// A reduction produced something its own contract rules out.
SYMRAD_DECLARE_ERROR(InvariantViolation);

#undef SYMRAD_DECLARE_ERROR

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(message + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace symrad
