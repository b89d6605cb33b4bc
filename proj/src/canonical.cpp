#include "orthostab/canonical.hpp"

#include <numeric>

namespace orthostab {

void SegmentSpec::validate() const {
  if (alpha.empty() || alpha.size() != mu.size())
    fail(ErrorKind::InvalidSpec, "segment spec needs matching nonempty alpha/mu");
  for (std::size_t r = 0; r < alpha.size(); ++r) {
    if (alpha[r] < 1) fail(ErrorKind::InvalidSpec, "alpha entries must be positive");
    if (mu[r] < 1) fail(ErrorKind::InvalidSpec, "mu entries must be positive");
    if (r + 1 < alpha.size() && alpha[r] <= alpha[r + 1])
      fail(ErrorKind::InvalidSpec, "alpha must be strictly decreasing");
  }
}

void CanonicalSpec::validate() const {
  segments.validate();
  switch (kind) {
    case CanonicalCase::NonzeroPair:
      if (lambda.is_zero()) fail(ErrorKind::InvalidSpec, "pair case requires lambda != 0");
      break;
    case CanonicalCase::OrthogonalGeneric:
      if (exp_lambda) {
        if (exp_lambda->is_zero() || *exp_lambda == ExactScalar(1) || *exp_lambda == ExactScalar(-1))
          fail(ErrorKind::InvalidSpec, "orth-generic requires e^lambda outside {0, 1, -1}");
      }
      break;
    case CanonicalCase::UnipotentSigned:
      if (epsilon != 1 && epsilon != -1) fail(ErrorKind::InvalidSpec, "epsilon must be +-1");
      break;
    case CanonicalCase::Nilpotent:
      break;
  }
}

int CanonicalSpec::size() const {
  int n = 0;
  for (int r = 0; r < segments.count(); ++r)
    n += pair_case() ? 2 * segments.alpha[r] * segments.mu[r]
                     : segments.alpha[r] * segments.m_tilde(r);
  return n;
}

EMat backward_identity(int n) {
  EMat e(n, n);
  for (int k = 0; k < n; ++k) e(k, n - 1 - k) = ExactScalar(1);
  return e;
}

EMat sign_alternator(int n) {
  EMat f(n, n);
  for (int k = 0; k < n; ++k) f(k, k) = ExactScalar(k % 2 == 0 ? -1 : 1);
  return f;
}

EMat e_block(int alpha, int m) {
  EMat e(alpha * m, alpha * m);
  for (int j = 0; j < alpha; ++j) e.set_block(j * m, (alpha - 1 - j) * m, EMat::identity(m));
  return e;
}

EMat f_alt_block(int alpha, int m) {
  EMat f(alpha * m, alpha * m);
  for (int j = 0; j < alpha; ++j)
    for (int t = 0; t < m; ++t) f(j * m + t, j * m + t) = ExactScalar(j % 2 == 0 ? 1 : -1);
  return f;
}

EMat m_block(int m) {
  EMat r(m, m);
  const ExactScalar half = ExactScalar::rational(1, 2);
  for (int k = 0; k + 1 < m; ++k) {
    r(k, k + 1) = half;
    r(k + 1, k) = -half;
  }
  return r;
}

// 2*lambda on the main anti-diagonal, ones on both adjacent anti-diagonals,
// everything scaled by i/2. Symmetric by construction.
EMat n_block(int m, const ExactScalar& lambda) {
  EMat r(m, m);
  const ExactScalar ihalf = ExactScalar::i() * ExactScalar::rational(1, 2);
  const ExactScalar ilambda = ExactScalar::i() * lambda;
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      const int s = j + k;  // anti-diagonal index, main one at m-1
      if (s == m - 1) r(j, k) = ilambda;
      else if (s == m - 2 || s == m) r(j, k) = ihalf;
    }
  return r;
}

EMat k_block(int m, const ExactScalar& lambda) {
  EMat mm = m_block(m), nn = n_block(m, lambda);
  EMat r(2 * m, 2 * m);
  r.set_block(0, 0, mm);
  r.set_block(0, m, nn);
  r.set_block(m, 0, -nn);
  r.set_block(m, m, -mm);
  return r;
}

EMat l_block(int n) {
  if (n < 1 || n % 2 == 0) fail(ErrorKind::InvalidBlock, "l_block size must be odd");
  const int m = (n + 1) / 2;
  EMat r(n, n);
  const ExactScalar half = ExactScalar::rational(1, 2);
  const ExactScalar ihalf = ExactScalar::i() * half;
  // 1-based row index j decides the sign split: first m-1 entries positive.
  for (int j = 1; j < n; ++j) {           // superdiagonal (j, j+1), 1-based
    ExactScalar v = j <= m - 1 ? half : -half;
    r(j - 1, j) = v;
    r(j, j - 1) = -v;
  }
  for (int j = 1; j < n; ++j) {           // anti-diagonal above the main one
    int k = n - j;                        // 1-based column, j + k = n
    ExactScalar v = j <= m - 1 ? ihalf : -ihalf;
    r(j - 1, k - 1) += v;
  }
  for (int j = 2; j <= n; ++j) {          // anti-diagonal below the main one
    int k = n + 2 - j;
    ExactScalar v = j <= m ? ihalf : -ihalf;
    r(j - 1, k - 1) += v;
  }
  return r;
}

EMat perm_matrix(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  EMat p(n, n);
  for (int c = 0; c < n; ++c) p(sigma[c], c) = ExactScalar(1);
  return p;
}

std::vector<int> omega_perm(int alpha, int m) {
  std::vector<int> sigma(static_cast<std::size_t>(alpha) * m);
  for (int k = 0; k < alpha; ++k)
    for (int j = 0; j < m; ++j) sigma[static_cast<std::size_t>(k) * m + j] = j * alpha + k;
  return sigma;
}

EMat omega(int alpha, int m) { return perm_matrix(omega_perm(alpha, m)); }

namespace {

// Index permutation that reorders blocks of the given sizes: output block
// position c holds source block tau[c].
std::vector<int> block_reorder_perm(const std::vector<int>& sizes, const std::vector<int>& tau) {
  std::vector<int> offset(sizes.size() + 1, 0);
  for (std::size_t k = 0; k < sizes.size(); ++k) offset[k + 1] = offset[k] + sizes[k];
  std::vector<int> sigma;
  sigma.reserve(offset.back());
  for (int src : tau)
    for (int t = 0; t < sizes[src]; ++t) sigma.push_back(offset[src] + t);
  return sigma;
}

}  // namespace

EMat omega_tilde(const SegmentSpec& spec) {
  spec.validate();
  const int N = spec.count();
  // Stage 1: within each segment, move the m_r plus-blocks in front of the
  // m_r minus-blocks (block version of Omega_{2,m}).
  std::vector<EMat> stage1;
  for (int r = 0; r < N; ++r) {
    const int m = spec.mu[r];
    std::vector<int> sizes(static_cast<std::size_t>(2) * m, spec.alpha[r]);
    std::vector<int> tau;
    for (int j = 0; j < m; ++j) tau.push_back(2 * j);
    for (int j = 0; j < m; ++j) tau.push_back(2 * j + 1);
    stage1.push_back(perm_matrix(block_reorder_perm(sizes, tau)));
  }
  EMat omega1 = direct_sum(stage1);
  // Stage 2: collect the plus-halves of all segments, then the minus-halves.
  std::vector<int> sizes;
  for (int r = 0; r < N; ++r) {
    sizes.push_back(spec.alpha[r] * spec.mu[r]);
    sizes.push_back(spec.alpha[r] * spec.mu[r]);
  }
  std::vector<int> tau;
  for (int r = 0; r < N; ++r) tau.push_back(2 * r);
  for (int r = 0; r < N; ++r) tau.push_back(2 * r + 1);
  EMat omega2 = perm_matrix(block_reorder_perm(sizes, tau));
  return omega1 * omega2;
}

EMat jordan_assembly(const CanonicalSpec& spec) {
  spec.validate();
  std::vector<EMat> blocks;
  for (int r = 0; r < spec.segments.count(); ++r) {
    const int a = spec.segments.alpha[r];
    for (int j = 0; j < spec.segments.mu[r]; ++j) {
      if (spec.pair_case()) {
        blocks.push_back(jordan_block(a, spec.lambda));
        blocks.push_back(jordan_block(a, -spec.lambda));
      } else if (a % 2 == 0) {
        blocks.push_back(jordan_block(a, ExactScalar()));
        blocks.push_back(jordan_block(a, ExactScalar()));
      } else {
        blocks.push_back(jordan_block(a, ExactScalar()));
      }
    }
  }
  return direct_sum(blocks);
}

namespace {

EMat p_factor(int n) {  // (1/sqrt2)(I + i E)
  EMat p = EMat::identity(n);
  EMat e = backward_identity(n);
  ExactScalar s = ExactScalar::inv_sqrt2();
  return (p + e * ExactScalar::i()) * s;
}

EMat r_factor_even(int alpha) {  // I_alpha + F_alpha on 2*alpha
  std::vector<EMat> parts{EMat::identity(alpha), sign_alternator(alpha)};
  return direct_sum(parts);
}

EMat r_factor_odd(int alpha) {  // I_{(a+1)/2} + F_{(a-1)/2}
  std::vector<EMat> parts{EMat::identity((alpha + 1) / 2), sign_alternator((alpha - 1) / 2)};
  return direct_sum(parts);
}

EMat transition_block(int alpha, bool pair_or_even) {
  if (pair_or_even) return r_factor_even(alpha) * p_factor(2 * alpha);
  return r_factor_odd(alpha) * p_factor(alpha);
}

}  // namespace

EMat transition(const CanonicalSpec& spec) {
  spec.validate();
  std::vector<EMat> blocks;
  for (int r = 0; r < spec.segments.count(); ++r) {
    const int a = spec.segments.alpha[r];
    for (int j = 0; j < spec.segments.mu[r]; ++j)
      blocks.push_back(transition_block(a, spec.pair_case() || a % 2 == 0));
  }
  return direct_sum(blocks);
}

EMat assemble_canonical(const CanonicalSpec& spec) {
  spec.validate();
  std::vector<EMat> blocks;
  for (int r = 0; r < spec.segments.count(); ++r) {
    const int a = spec.segments.alpha[r];
    for (int j = 0; j < spec.segments.mu[r]; ++j) {
      switch (spec.kind) {
        case CanonicalCase::NonzeroPair:
          blocks.push_back(k_block(a, spec.lambda));
          break;
        case CanonicalCase::Nilpotent:
          blocks.push_back(a % 2 == 0 ? k_block(a, ExactScalar()) : l_block(a));
          break;
        case CanonicalCase::OrthogonalGeneric: {
          if (!spec.exp_lambda)
            fail(ErrorKind::BackendUnavailable,
                 "exact orth-generic assembly needs a field-valued e^lambda");
          blocks.push_back(exp_k_block(a, spec.lambda, *spec.exp_lambda));
          break;
        }
        case CanonicalCase::UnipotentSigned: {
          EMat base = a % 2 == 0 ? k_block(a, ExactScalar()) : l_block(a);
          blocks.push_back(exp_nilpotent(base) * ExactScalar(spec.epsilon));
          break;
        }
      }
    }
  }
  return direct_sum(blocks);
}

FMat assemble_canonical_float(const CanonicalSpec& spec) {
  spec.validate();
  if (spec.kind != CanonicalCase::OrthogonalGeneric) return to_float(assemble_canonical(spec));
  std::vector<FMat> blocks;
  for (int r = 0; r < spec.segments.count(); ++r) {
    const int a = spec.segments.alpha[r];
    for (int j = 0; j < spec.segments.mu[r]; ++j)
      blocks.push_back(exp_k_block_float(a, spec.lambda.to_float()));
  }
  return direct_sum(blocks);
}

EMat exp_nilpotent(const EMat& b) {
  if (!b.square()) fail(ErrorKind::ShapeError, "exponential of non-square matrix");
  const int n = b.rows();
  EMat sum = EMat::identity(n), power = EMat::identity(n);
  Rational factorial(1);
  for (int k = 1; k < n; ++k) {
    power = power * b;
    factorial *= k;
    sum = sum + power * ExactScalar(Rational(1) / factorial);
  }
  if (!(power * b).is_zero()) fail(ErrorKind::NotNilpotent, "matrix is not nilpotent");
  return sum;
}

EMat exp_shifted(const EMat& b, const ExactScalar& lambda, const ExactScalar& exp_lambda) {
  EMat nil = b - EMat::identity(b.rows()) * lambda;
  return exp_nilpotent(nil) * exp_lambda;
}

EMat exp_k_block(int alpha, const ExactScalar& lambda, const ExactScalar& exp_lambda) {
  CanonicalSpec one;
  one.kind = CanonicalCase::NonzeroPair;
  one.segments = {{alpha}, {1}};
  one.lambda = lambda.is_zero() ? ExactScalar(1) : lambda;  // transition is lambda-independent
  EMat s = transition(one);
  EMat sinv = inverse(s);
  EMat en = exp_nilpotent(jordan_block(alpha, ExactScalar()));
  std::vector<EMat> mid{en * exp_lambda, en * exp_lambda.inv()};
  return sinv * direct_sum(mid) * s;
}

FMat exp_k_block_float(int alpha, FloatScalar lambda) {
  CanonicalSpec one;
  one.kind = CanonicalCase::NonzeroPair;
  one.segments = {{alpha}, {1}};
  one.lambda = ExactScalar(1);
  FMat s = to_float(transition(one));
  FMat sinv = to_float(inverse(transition(one)));
  FMat en = to_float(exp_nilpotent(jordan_block(alpha, ExactScalar())));
  FloatScalar el = std::exp(lambda);
  std::vector<FMat> mid{en * el, en * (1.0 / el)};
  return sinv * direct_sum(mid) * s;
}

}  // namespace orthostab
