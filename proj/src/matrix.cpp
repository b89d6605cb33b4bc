#include "orthostab/matrix.hpp"

#include <algorithm>

namespace orthostab {

FMat to_float(const EMat& m) {
  FMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).to_float();
  return r;
}

double max_abs(const FMat& m) {
  double v = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v = std::max(v, std::abs(m(i, j)));
  return v;
}

double max_abs_diff(const FMat& x, const FMat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) fail(ErrorKind::ShapeError, "shape mismatch");
  double v = 0;
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) v = std::max(v, std::abs(x(i, j) - y(i, j)));
  return v;
}

namespace {

// Multiply each row by the lcm of the denominators of its 4 coordinates per
// entry, so every entry becomes integral. Row scaling does not change rank.
void clear_denominators(EMat& m) {
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class l(1);
    for (int j = 0; j < m.cols(); ++j) {
      const ExactScalar& x = m(i, j);
      for (const Rational* q : {&x.a, &x.b, &x.c, &x.d}) {
        mpz_class den = q->get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        l = l / g * den;
      }
    }
    if (l == 1) continue;
    ExactScalar s{Rational(l), Rational(0), Rational(0), Rational(0)};
    for (int j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) * s;
  }
}

}  // namespace

int rank_exact(EMat m) {
  clear_denominators(m);
  const int rows = m.rows(), cols = m.cols();
  ExactScalar prev(1);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (!m(i, col).is_zero()) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
    const ExactScalar p = m(rank, col);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j)
        m(i, j) = (p * m(i, j) - m(i, col) * m(rank, j)) / prev;
      m(i, col) = ExactScalar();
    }
    prev = p;
    ++rank;
  }
  return rank;
}

int nullspace_dim(const EMat& m) { return m.cols() - rank_exact(m); }

ExactScalar det_exact(EMat m) {
  if (!m.square()) fail(ErrorKind::ShapeError, "determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return ExactScalar(1);
  ExactScalar prev(1), sign(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (!m(i, col).is_zero()) { pivot = i; break; }
    if (pivot < 0) return ExactScalar();
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      sign = -sign;
    }
    const ExactScalar p = m(col, col);
    for (int i = col + 1; i < n; ++i) {
      for (int j = col + 1; j < n; ++j)
        m(i, j) = (p * m(i, j) - m(i, col) * m(col, j)) / prev;
      m(i, col) = ExactScalar();
    }
    prev = p;
  }
  return sign * m(n - 1, n - 1);
}

EMat inverse(const EMat& m) {
  if (!m.square()) fail(ErrorKind::ShapeError, "inverse of non-square matrix");
  const int n = m.rows();
  EMat a = m, inv = EMat::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (!a(i, col).is_zero()) { pivot = i; break; }
    if (pivot < 0) fail(ErrorKind::SingularMatrix, "singular matrix");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const ExactScalar p = a(col, col).inv();
    for (int j = 0; j < n; ++j) { a(col, j) *= p; inv(col, j) *= p; }
    for (int i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const ExactScalar f = a(i, col);
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::vector<EMat> nullspace_basis(const EMat& m) {
  const int rows = m.rows(), cols = m.cols();
  EMat a = m;
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (!a(i, col).is_zero()) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < cols; ++j) std::swap(a(pivot, j), a(r, j));
    const ExactScalar p = a(r, col).inv();
    for (int j = 0; j < cols; ++j) a(r, j) *= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a(i, col).is_zero()) continue;
      const ExactScalar f = a(i, col);
      for (int j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_col.push_back(col);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<EMat> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    EMat v(cols, 1);
    v(free, 0) = ExactScalar(1);
    for (int k = 0; k < r; ++k) v(pivot_col[k], 0) = -a(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank_float(FMat m, double tol) {
  const int rows = m.rows(), cols = m.cols();
  const double threshold = tol * std::max(1e-300, max_abs(m));
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    double best = threshold;
    for (int i = rank; i < rows; ++i)
      if (std::abs(m(i, col)) > best) { best = std::abs(m(i, col)); pivot = i; }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
    for (int i = rank + 1; i < rows; ++i) {
      FloatScalar f = m(i, col) / m(rank, col);
      for (int j = col; j < cols; ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

int nullspace_dim(const FMat& m, double tol) { return m.cols() - rank_float(m, tol); }

FMat inverse(const FMat& m) {
  if (!m.square()) fail(ErrorKind::ShapeError, "inverse of non-square matrix");
  const int n = m.rows();
  FMat a = m, inv = FMat::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    double best = 0;
    for (int i = col; i < n; ++i)
      if (std::abs(a(i, col)) > best) { best = std::abs(a(i, col)); pivot = i; }
    if (pivot < 0 || best == 0) fail(ErrorKind::SingularMatrix, "singular matrix");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const FloatScalar p = 1.0 / a(col, col);
    for (int j = 0; j < n; ++j) { a(col, j) *= p; inv(col, j) *= p; }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      const FloatScalar f = a(i, col);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace orthostab
