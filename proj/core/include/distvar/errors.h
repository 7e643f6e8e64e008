#pragma once

#include <stdexcept>
#include <string>

namespace distvar {

// Root of every error raised by the library. The CLI maps these to exit
// code 1; usage problems are reported separately.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Objects from rings of different sizes were combined.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An index or parameter is outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// A Groebner computation exceeded its configured pair or reduction budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Numeric input is degenerate (rank deficiency, vanishing denominator).
class DegenerateDataError : public Error {
 public:
  using Error::Error;
};

// A numeric routine failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Self-validation of a constructed artifact failed.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace distvar
