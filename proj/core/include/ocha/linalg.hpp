#pragma once

#include "ocha/scalar.hpp"

#include <optional>
#include <vector>

namespace ocha {

/// Dense exact matrix, row-major.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }
  std::vector<Scalar> row(int r) const;
  std::vector<Scalar> column(int c) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form: rows[i] has a 1 in column pivots[i] and zeros
/// in every other pivot column. Zero rows are dropped.
struct Echelon {
  std::vector<std::vector<Scalar>> rows;
  std::vector<int> pivots;
  int cols = 0;
  int rank() const { return static_cast<int>(pivots.size()); }
};

/// Fraction-free Gaussian elimination on the given row vectors (all of equal
/// length `cols`). Rows are scaled to primitive integer vectors and the pivot
/// with the smallest absolute value is used in each column; the result is
/// converted back to exact RREF.
Echelon row_reduce(const std::vector<std::vector<Scalar>>& rows, int cols);

int rank(const Matrix& m);

/// Basis of {x : m x = 0}. With columns ordered by some weight, each basis
/// vector is supported on its free column and earlier pivot columns.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

/// Some x with m x = b, or nullopt when b is outside the column span.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

/// Reduces v against an echelon form; returns the remainder (zero iff v lies
/// in the row span).
std::vector<Scalar> reduce_against(const Echelon& e, std::vector<Scalar> v);

}  // namespace ocha
