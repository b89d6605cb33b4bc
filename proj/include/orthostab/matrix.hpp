#pragma once

#include <cmath>
#include <initializer_list>
#include <vector>

#include "orthostab/errors.hpp"
#include "orthostab/scalar.hpp"

namespace orthostab {

// Dense row-major matrix over a scalar backend. Pure value type.
template <typename S>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) fail(ErrorKind::ShapeError, "negative dimension");
  }
  Mat(std::initializer_list<std::initializer_list<S>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
    e_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : init) {
      if (static_cast<int>(row.size()) != cols_) fail(ErrorKind::ShapeError, "ragged initializer");
      for (const auto& x : row) e_.push_back(x);
    }
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  S& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const S& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool operator==(const Mat& y) const { return rows_ == y.rows_ && cols_ == y.cols_ && e_ == y.e_; }
  bool operator!=(const Mat& y) const { return !(*this == y); }

  Mat operator+(const Mat& y) const {
    check_same_shape(y);
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + y.e_[k];
    return r;
  }
  Mat operator-(const Mat& y) const {
    check_same_shape(y);
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - y.e_[k];
    return r;
  }
  Mat operator-() const {
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
    return r;
  }
  Mat operator*(const Mat& y) const {
    if (cols_ != y.rows_) fail(ErrorKind::ShapeError, "product shape mismatch");
    Mat r(rows_, y.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const S& aik = (*this)(i, k);
        if (is_zero_entry(aik)) continue;
        for (int j = 0; j < y.cols_; ++j) r(i, j) += aik * y(k, j);
      }
    return r;
  }
  Mat operator*(const S& s) const {
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * s;
    return r;
  }

  Mat transposed() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!is_zero_entry(x)) return false;
    return true;
  }

  Mat block(int i0, int j0, int rows, int cols) const {
    if (i0 < 0 || j0 < 0 || i0 + rows > rows_ || j0 + cols > cols_)
      fail(ErrorKind::ShapeError, "block out of range");
    Mat r(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r(i, j) = (*this)(i0 + i, j0 + j);
    return r;
  }
  void set_block(int i0, int j0, const Mat& b) {
    if (i0 < 0 || j0 < 0 || i0 + b.rows() > rows_ || j0 + b.cols() > cols_)
      fail(ErrorKind::ShapeError, "block out of range");
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) (*this)(i0 + i, j0 + j) = b(i, j);
  }

  static bool is_zero_entry(const S& x) {
    if constexpr (std::is_same_v<S, ExactScalar>) return x.is_zero();
    else return x == S(0);
  }

 private:
  void check_same_shape(const Mat& y) const {
    if (rows_ != y.rows_ || cols_ != y.cols_) fail(ErrorKind::ShapeError, "shape mismatch");
  }

  int rows_, cols_;
  std::vector<S> e_;
};

using EMat = Mat<ExactScalar>;
using FMat = Mat<FloatScalar>;

template <typename S>
Mat<S> transpose(const Mat<S>& m) { return m.transposed(); }

template <typename S>
Mat<S> direct_sum(const std::vector<Mat<S>>& blocks) {
  int rows = 0, cols = 0;
  for (const auto& b : blocks) { rows += b.rows(); cols += b.cols(); }
  Mat<S> r(rows, cols);
  int i0 = 0, j0 = 0;
  for (const auto& b : blocks) {
    r.set_block(i0, j0, b);
    i0 += b.rows();
    j0 += b.cols();
  }
  return r;
}

FMat to_float(const EMat& m);

double max_abs(const FMat& m);
double max_abs_diff(const FMat& x, const FMat& y);

// --- exact elimination -----------------------------------------------------

// Rank by fraction-free (Bareiss) elimination with deterministic
// first-nonzero pivoting; denominators are cleared row-wise up front so all
// intermediate entries stay in Z[i, sqrt2].
int rank_exact(EMat m);
int nullspace_dim(const EMat& m);
ExactScalar det_exact(EMat m);
EMat inverse(const EMat& m);

// Basis of {x : m x = 0}, one column vector per basis element, via
// Gauss-Jordan over the field. Deterministic.
std::vector<EMat> nullspace_basis(const EMat& m);

// --- float elimination ------------------------------------------------------

// Column-pivoted elimination; entries below tol * max|entry| count as zero.
int rank_float(FMat m, double tol = 1e-8);
int nullspace_dim(const FMat& m, double tol = 1e-8);
FMat inverse(const FMat& m);

}  // namespace orthostab
