#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schur {

/// Dense matrix over an exact field scalar K (Gf or Rat).
///
/// Elimination routines use a fixed pivot rule (first nonzero entry scanning
/// columns left to right, rows top to bottom) so results are deterministic.
template <class K>
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, K fill = K(0))
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {}

  static Matrix identity(int n, K one = K(1)) {
    Matrix m(n, n, one - one);
    for (int i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  K& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const K& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r = a;
    for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r = a;
    for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const K& x = a.at(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const K& y = b.at(k, j);
          if (!y.is_zero()) r.at(i, j) += x * y;
        }
      }
    return r;
  }
  Matrix operator*(const K& s) const {
    Matrix r = *this;
    for (auto& x : r.a_) x *= s;
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t k = 0; k < a.a_.size(); ++k)
      if (!(a.a_[k] == b.a_[k])) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const {
    for (auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  /// In-place reduced row echelon form; returns the pivot column list.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
      int p = -1;
      for (int i = row; i < rows_; ++i)
        if (!at(i, col).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) continue;
      if (p != row)
        for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
      K inv = at(row, col).inv();
      for (int j = col; j < cols_; ++j) at(row, j) *= inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == row) continue;
        K f = at(i, col);
        if (f.is_zero()) continue;
        for (int j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  int rank() const {
    Matrix m = *this;
    return static_cast<int>(m.rref().size());
  }

  /// Basis of the right kernel {x : Mx = 0}, one column vector per basis
  /// element, in reduced echelon order (free columns ascending).
  std::vector<std::vector<K>> nullspace() const {
    Matrix m = *this;
    std::vector<int> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (int free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<K> v(cols_, K(0));
      v[free] = K(1);
      for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  Matrix inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("dimension mismatch");
    Matrix aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_ + i) = K(1);
    }
    std::vector<int> pivots = aug.rref();
    if (static_cast<int>(pivots.size()) < rows_) throw std::domain_error("matrix is singular");
    for (int r = 0; r < rows_; ++r)
      if (pivots[r] != r) throw std::domain_error("matrix is singular");
    Matrix inv(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
  }

  K det() const {
    if (rows_ != cols_) throw std::invalid_argument("dimension mismatch");
    Matrix m = *this;
    K d = K(1);
    for (int col = 0; col < cols_; ++col) {
      int p = -1;
      for (int i = col; i < rows_; ++i)
        if (!m.at(i, col).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) return K(0) * d; // zero in the ambient field
      if (p != col) {
        for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(col, j));
        d = -d;
      }
      d *= m.at(col, col);
      K inv = m.at(col, col).inv();
      for (int i = col + 1; i < rows_; ++i) {
        K f = m.at(i, col) * inv;
        if (f.is_zero()) continue;
        for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
      }
    }
    return d;
  }

private:
  int rows_, cols_;
  std::vector<K> a_;

  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch");
  }
};

template <class K>
int matrix_rank(const Matrix<K>& m) {
  return m.rank();
}

/// Kronecker product with the left factor most significant, matching
/// row-major mixed-radix indexing.
template <class K>
Matrix<K> kron(const Matrix<K>& a, const Matrix<K>& b, const K& zero) {
  Matrix<K> r(a.rows() * b.rows(), a.cols() * b.cols(), zero);
  for (int i1 = 0; i1 < a.rows(); ++i1)
    for (int j1 = 0; j1 < a.cols(); ++j1) {
      const K& x = a.at(i1, j1);
      if (x.is_zero()) continue;
      for (int i2 = 0; i2 < b.rows(); ++i2)
        for (int j2 = 0; j2 < b.cols(); ++j2)
          r.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = x * b.at(i2, j2);
    }
  return r;
}

} // namespace schur
