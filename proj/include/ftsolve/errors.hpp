#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ftsolve {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree (vector length vs. matrix dimension, etc).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A matrix failed construction-time validation (bad offsets, NaN values, ...).
class InvalidMatrixError : public Error {
 public:
  using Error::Error;
};

/// Matrix Market parsing/IO failure. `kind()` distinguishes the failure class.
class MatrixMarketError : public Error {
 public:
  enum class Kind { Io, BadHeader, UnsupportedField, BadIndex, BadValue };

  MatrixMarketError(Kind kind, const std::string& what)
      : Error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A non-finite value was handed to a kernel that requires finite input.
/// Carries the index of the offending entry.
class NonFiniteError : public Error {
 public:
  NonFiniteError(std::size_t index, const std::string& what)
      : Error(what), index_(index) {}

  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

}  // namespace ftsolve
