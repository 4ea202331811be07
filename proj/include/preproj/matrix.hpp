#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "preproj/scalar.hpp"

namespace preproj {

/// Dense row-major matrix over exact Gaussian rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const Scalar& s);
  /// 1×1 matrix holding s.
  static Matrix of(const Scalar& s);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols_if_empty = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool is_identity() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix operator-() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Copies `block` into this matrix with its top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const Matrix& block);
  Matrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

  /// Stacks matrices with equal column counts.
  static Matrix vstack(const std::vector<Matrix>& parts, std::size_t cols);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form computed in place; returns pivot columns in order.
/// Pivots are chosen as the first nonzero entry scanning rows top-down, so the
/// result is deterministic.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {x : m x = 0} as the columns of the returned matrix.
///
/// Column k has a 1 at the k-th free column of the echelon form and 0 at the
/// other free columns, so coordinates of any kernel vector in this basis are
/// its entries at `free_columns`.
struct Kernel {
  Matrix basis;
  std::vector<std::size_t> free_columns;

  std::size_t dim() const { return basis.cols(); }
  /// Coordinates of v (which must lie in the span) in this basis.
  /// Throws std::logic_error when v is not in the span.
  Matrix coordinates(const Matrix& v) const;
};

Kernel nullspace(const Matrix& m, std::size_t cols);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace preproj
