#pragma once

#include <cstdint>

#include "orthostab/matrix.hpp"
#include "orthostab/scalar.hpp"

namespace orthostab {

// splitmix64: tiny, portable, and stable across platforms, which keeps seeded
// CLI runs byte-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  long int_in(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Small rationals keep exact-arithmetic growth tame: numerators in [-3, 3],
  // denominators in {1, 2, 3}.
  Rational rational() {
    Rational q(int_in(-3, 3), int_in(1, 3));
    q.canonicalize();
    return q;
  }

  ExactScalar scalar() {  // Gaussian-rational draw a + c*i
    return {rational(), Rational(0), rational(), Rational(0)};
  }

  ExactScalar real_scalar() { return {rational(), Rational(0), Rational(0), Rational(0)}; }

  EMat matrix(int rows, int cols) {
    EMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = scalar();
    return m;
  }

  EMat nonsingular_matrix(int n, int max_tries = 64) {
    for (int t = 0; t < max_tries; ++t) {
      EMat m = matrix(n, n);
      if (!det_exact(m).is_zero()) return m;
    }
    fail(ErrorKind::SamplingFailed, "could not draw a nonsingular matrix");
  }

  // symmetric (par = +1) or skew-symmetric (par = -1) draw
  EMat symmetric_matrix(int n, int par) {
    EMat m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        if (i == j) {
          m(i, i) = par > 0 ? scalar() : ExactScalar();
        } else {
          ExactScalar x = scalar();
          m(i, j) = x;
          m(j, i) = par > 0 ? x : -x;
        }
      }
    }
    return m;
  }

 private:
  std::uint64_t state_;
};

}  // namespace orthostab
