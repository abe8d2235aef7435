#pragma once

#include <stdexcept>
#include <string>

namespace sqsym {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// -----------------------------
// Table construction / validation
// -----------------------------

class TableError : public Error {
 public:
  using Error::Error;
};

class NonSquareError : public TableError {
 public:
  using TableError::TableError;
};

class NegativeEntryError : public TableError {
 public:
  using TableError::TableError;
};

class EmptyTableError : public TableError {
 public:
  using TableError::TableError;
};

class DimensionError : public TableError {
 public:
  using TableError::TableError;
};

// -----------------------------
// Closed-form fits undefined for the given data
// -----------------------------

class DegenerateFitError : public Error {
 public:
  using Error::Error;
};

/// A band with observations on one side of the diagonal only, where the
/// requested fit needs both sides.
class DegenerateBandError : public DegenerateFitError {
 public:
  DegenerateBandError(const std::string& what, int band)
      : DegenerateFitError(what), band_(band) {}
  int band() const noexcept { return band_; }

 private:
  int band_;
};

class DegenerateTriangleError : public DegenerateFitError {
 public:
  using DegenerateFitError::DegenerateFitError;
};

// -----------------------------
// Numerical failures
// -----------------------------

class NumericError : public Error {
 public:
  using Error::Error;
};

class DomainError : public NumericError {
 public:
  using NumericError::NumericError;
};

class RangeError : public NumericError {
 public:
  using NumericError::NumericError;
};

class UndefinedStatisticError : public NumericError {
 public:
  using NumericError::NumericError;
};

class ZeroCellError : public NumericError {
 public:
  using NumericError::NumericError;
};

class SingularInformationError : public NumericError {
 public:
  using NumericError::NumericError;
};

// -----------------------------
// Input parsing (CSV / JSON report layer)
// -----------------------------

/// Carries 1-based coordinates of the offending cell where known
/// (0 = not applicable).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, int row = 0, int column = 0)
      : Error(what), row_(row), column_(column) {}
  int row() const noexcept { return row_; }
  int column() const noexcept { return column_; }

 private:
  int row_;
  int column_;
};

}  // namespace sqsym
