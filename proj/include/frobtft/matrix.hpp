#ifndef FROBTFT_MATRIX_HPP
#define FROBTFT_MATRIX_HPP

// Dense matrices over a cyclotomic field and the exact linear algebra used
// throughout: elimination, rank, kernel, inverse, solving.  No pivoting
// tolerance exists; a pivot is any nonzero entry.

#include <utility>
#include <vector>

#include "frobtft/cyclotomic.hpp"

namespace frobtft {

class Matrix {
 public:
  Matrix() : rows_(0), cols_(0), conductor_(1) {}

  Matrix(size_t rows, size_t cols, long conductor)
      : rows_(rows), cols_(cols), conductor_(conductor),
        entries_(rows * cols, Scalar::zero(conductor)) {}

  static Matrix identity(size_t n, long conductor) {
    Matrix m(n, n, conductor);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::from_rational(1, conductor);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  long conductor() const { return conductor_; }

  Scalar& at(size_t r, size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& at(size_t r, size_t c) const { return entries_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shape mismatch in +");
    Matrix r = a;
    for (size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] = r.entries_[i] + b.entries_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shape mismatch in -");
    Matrix r = a;
    for (size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] = r.entries_[i] - b.entries_[i];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix shape mismatch in *");
    Matrix r(a.rows_, b.cols_, a.conductor_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (size_t j = 0; j < b.cols_; ++j) {
          if (b.at(k, j).is_zero()) continue;
          r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
        }
      }
    return r;
  }

  friend Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix r = a;
    for (auto& e : r.entries_) e = s * e;
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_, conductor_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Matrix conj() const {
    Matrix r = *this;
    for (auto& e : r.entries_) e = e.conj();
    return r;
  }

  Scalar trace() const {
    if (rows_ != cols_) throw Error("trace of non-square matrix");
    Scalar t = Scalar::zero(conductor_);
    for (size_t i = 0; i < rows_; ++i) t = t + at(i, i);
    return t;
  }

  // Row-reduced echelon form; returns pivot column indices.
  std::vector<size_t> rref() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
      size_t p = r;
      while (p < rows_ && at(p, c).is_zero()) ++p;
      if (p == rows_) continue;
      swap_rows(p, r);
      Scalar inv = at(r, c).inverse();
      for (size_t j = c; j < cols_; ++j) at(r, j) = inv * at(r, j);
      for (size_t i = 0; i < rows_; ++i) {
        if (i == r || at(i, c).is_zero()) continue;
        Scalar f = at(i, c);
        for (size_t j = c; j < cols_; ++j) at(i, j) = at(i, j) - f * at(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  size_t rank() const {
    Matrix m = *this;
    return m.rref().size();
  }

  // Columns form a basis of the null space, M * kernel(M) = 0.
  Matrix kernel() const {
    Matrix m = *this;
    std::vector<size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    size_t k = cols_ - pivots.size();
    Matrix ker(cols_, k, conductor_);
    size_t col = 0;
    for (size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      ker.at(free, col) = Scalar::from_rational(1, conductor_);
      for (size_t pi = 0; pi < pivots.size(); ++pi)
        ker.at(pivots[pi], col) = -m.at(pi, free);
      ++col;
    }
    return ker;
  }

  Matrix inverse() const {
    if (rows_ != cols_) throw Error("inverse of non-square matrix");
    Matrix aug(rows_, 2 * cols_, conductor_);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_ + i) = Scalar::from_rational(1, conductor_);
    }
    std::vector<size_t> pivots = aug.rref();
    if (pivots.size() != rows_) throw Error("matrix is singular");
    Matrix inv(rows_, cols_, conductor_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
  }

  // Solve M x = b; throws if inconsistent.  b may have several columns.
  Matrix solve(const Matrix& b) const {
    if (b.rows_ != rows_) throw Error("solve: shape mismatch");
    Matrix aug(rows_, cols_ + b.cols_, conductor_);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      for (size_t j = 0; j < b.cols_; ++j) aug.at(i, cols_ + j) = b.at(i, j);
    }
    std::vector<size_t> pivots = aug.rref();
    for (size_t c : pivots)
      if (c >= cols_) throw Error("solve: inconsistent system");
    Matrix x(cols_, b.cols_, conductor_);
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      for (size_t j = 0; j < b.cols_; ++j) x.at(pivots[pi], j) = aug.at(pi, cols_ + j);
    return x;
  }

  // Basis of the column span, as the pivot columns of the input.
  Matrix column_space_basis() const {
    Matrix m = *this;
    std::vector<size_t> pivots = m.rref();
    Matrix basis(rows_, pivots.size(), conductor_);
    for (size_t k = 0; k < pivots.size(); ++k)
      for (size_t i = 0; i < rows_; ++i) basis.at(i, k) = at(i, pivots[k]);
    return basis;
  }

 private:
  void swap_rows(size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }

  size_t rows_, cols_;
  long conductor_;
  std::vector<Scalar> entries_;
};

}  // namespace frobtft

#endif
