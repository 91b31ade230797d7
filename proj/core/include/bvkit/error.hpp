#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bvkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("scalars from different fields combined") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// d_out * d_in != 0; `witness` is the index of a basis vector e with d_out(d_in(e)) != 0.
class NotAComplex : public Error {
 public:
  NotAComplex(std::size_t witness, const std::string& detail)
      : Error("composite of differentials is nonzero: " + detail), witness_(witness) {}
  std::size_t witness() const { return witness_; }

 private:
  std::size_t witness_;
};

class MissingStructure : public Error {
 public:
  using Error::Error;
};

class ArityOverflow : public Error {
 public:
  ArityOverflow(int requested, int budget)
      : Error("arity " + std::to_string(requested) + " exceeds budget " + std::to_string(budget)) {}
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A precondition of a construction that is itself a mathematical check failed
// (e.g. a modular pair that is not in involution).
class CheckFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace bvkit
