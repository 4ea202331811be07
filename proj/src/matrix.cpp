#include "preproj/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace preproj {

Matrix Matrix::identity(std::size_t n) { return scalar(n, Scalar(1)); }

Matrix Matrix::scalar(std::size_t n, const Scalar& s) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = s;
  return m;
}

Matrix Matrix::of(const Scalar& s) { return scalar(1, s); }

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols_if_empty) {
  std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ValidationError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != Scalar(r == c ? 1 : 0)) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("matrix shape mismatch in +");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("matrix shape mismatch in -");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_)
    if (!x.is_zero()) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::logic_error("matrix shape mismatch in *");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const Scalar& y = b(k, c);
        if (y.is_zero()) continue;
        out(r, c) += x * y;
      }
    }
  }
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& x : out.data_)
    if (!x.is_zero()) x = -x;
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& block) {
  if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_) throw std::logic_error("block out of range");
  for (std::size_t r = 0; r < block.rows_; ++r)
    for (std::size_t c = 0; c < block.cols_; ++c) (*this)(r0 + r, c0 + c) = block(r, c);
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw std::logic_error("block out of range");
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

Matrix Matrix::vstack(const std::vector<Matrix>& parts, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols_ != cols) throw std::logic_error("vstack column mismatch");
    rows += p.rows_;
  }
  Matrix out(rows, cols);
  std::size_t r0 = 0;
  for (const auto& p : parts) {
    out.set_block(r0, 0, p);
    r0 += p.rows_;
  }
  return out;
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && m(sel, col).is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != row)
      for (std::size_t c = col; c < cols; ++c) std::swap(m(sel, c), m(row, c));
    Scalar inv = Scalar(1) / m(row, col);
    for (std::size_t c = col; c < cols; ++c)
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar factor = m(r, col);
      for (std::size_t c = col; c < cols; ++c)
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Kernel nullspace(const Matrix& m, std::size_t cols) {
  Kernel k;
  if (m.rows() == 0) {
    k.basis = Matrix::identity(cols);
    for (std::size_t c = 0; c < cols; ++c) k.free_columns.push_back(c);
    return k;
  }
  if (m.cols() != cols) throw std::logic_error("nullspace column mismatch");
  Matrix e = m;
  auto pivots = rref(e);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) k.free_columns.push_back(c);
  k.basis = Matrix(cols, k.free_columns.size());
  for (std::size_t f = 0; f < k.free_columns.size(); ++f) {
    std::size_t fc = k.free_columns[f];
    k.basis(fc, f) = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (!e(r, fc).is_zero()) k.basis(pivots[r], f) = -e(r, fc);
  }
  return k;
}

Matrix Kernel::coordinates(const Matrix& v) const {
  Matrix coords(free_columns.size(), v.cols());
  for (std::size_t f = 0; f < free_columns.size(); ++f)
    for (std::size_t c = 0; c < v.cols(); ++c) coords(f, c) = v(free_columns[f], c);
  if (!(basis * coords == v)) throw std::logic_error("vector does not lie in the kernel span");
  return coords;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix::identity(n));
  auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  return aug.block(0, n, n, n);
}

}  // namespace preproj
