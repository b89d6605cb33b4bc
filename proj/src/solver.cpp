#include "orthostab/solver.hpp"

#include <cassert>

namespace orthostab {

void CongruenceProblem::validate() const {
  spec.validate();
  b.validate();
  c.validate();
  if (b.spec.alpha != spec.alpha || b.spec.mu != spec.mu || c.spec.alpha != spec.alpha ||
      c.spec.mu != spec.mu)
    fail(ErrorKind::ShapeError, "B/C data must live on the problem spec");
  if (b.sigma != c.sigma) fail(ErrorKind::ParityError, "B and C have different parity modes");
}

int zee_parity(const SegmentSpec& spec, int sigma, int r, int j) {
  return ((spec.alpha[r] + j) % 2 == 0 ? 1 : -1) * sigma;
}

namespace {

class SolveState {
 public:
  SolveState(const CongruenceProblem& p, const FreeData& f) : p_(p), x_(zero_patterned(p.spec)) {
    const SegmentSpec& spec = p.spec;
    const int N = spec.count();
    have_.resize(N);
    for (int r = 0; r < N; ++r) {
      have_[r].resize(N);
      for (int s = 0; s < N; ++s) have_[r][s].assign(b_min(spec, r, s), 0);
    }

    // free blocks below the diagonal
    for (const auto& [key, coeffs] : f.below) {
      auto [r, s] = key;
      if (r <= s || r >= N || s < 0) fail(ErrorKind::InvalidInput, "below keys need r > s");
      if (static_cast<int>(coeffs.size()) != b_min(spec, r, s))
        fail(ErrorKind::ShapeError, "below block (r,s) needs min(alpha_r, alpha_s) coefficients");
      for (int j = 0; j < b_min(spec, r, s); ++j) {
        if (coeffs[j].rows() != spec.mu[r] || coeffs[j].cols() != spec.mu[s])
          fail(ErrorKind::ShapeError, "below coefficient shape mismatch");
        set(r, s, j, coeffs[j]);
      }
    }
    for (int r = 0; r < N; ++r)
      for (int s = 0; s < r; ++s)
        for (int j = 0; j < b_min(spec, r, s); ++j)
          if (!have_[r][s][j]) set(r, s, j, EMat(spec.mu[r], spec.mu[s]));

    // seeds
    if (static_cast<int>(f.seeds.size()) != N)
      fail(ErrorKind::InvalidSeed, "need one seed per segment");
    for (int r = 0; r < N; ++r) {
      const EMat& a0 = f.seeds[r];
      if (a0.rows() != spec.mu[r] || a0.cols() != spec.mu[r])
        fail(ErrorKind::InvalidSeed, "seed shape mismatch in segment " + std::to_string(r + 1));
      EMat residual = p.c.coeff[r][0] - transpose(a0) * p.b.coeff[r][0] * a0;
      if (!residual.is_zero())
        fail(ErrorKind::InvalidSeed,
             "segment " + std::to_string(r + 1) + ": C_0 != A_0^T B_0 A_0");
      set(r, r, 0, a0);
      a0c0inv_.push_back(a0 * inverse(p.c.coeff[r][0]));
    }

    // parity-constrained free blocks
    if (static_cast<int>(f.zees.size()) != N) fail(ErrorKind::ParityError, "need one Z list per segment");
    for (int r = 0; r < N; ++r) {
      if (static_cast<int>(f.zees[r].size()) != spec.alpha[r] - 1)
        fail(ErrorKind::ParityError, "segment " + std::to_string(r + 1) + " needs alpha_r - 1 Z blocks");
      for (int j = 1; j <= spec.alpha[r] - 1; ++j) {
        const EMat& z = f.zees[r][j - 1];
        const int sign = zee_parity(spec, p.sigma(), r, j);
        if (z.rows() != spec.mu[r] || z.cols() != spec.mu[r] ||
            transpose(z) != z * ExactScalar(sign))
          fail(ErrorKind::ParityError, "Z_" + std::to_string(j) + "^" + std::to_string(r + 1) +
                                           " breaks the parity rule");
      }
    }
  }

  ToeplitzElement run(const FreeData& f, EvalOrder order) {
    const SegmentSpec& spec = p_.spec;
    const int N = spec.count();
    for (int j = 0; j < spec.alpha[0]; ++j) {
      if (order == EvalOrder::Standard) diagonal_pass(f, j);
      for (int p = 1; p <= N - 1; ++p)
        for (int r = 0; r + p < N; ++r) {
          const int s = r + p;
          if (j > spec.alpha[s] - 1) continue;
          EMat d = xi(r, s, j, p) + big_xi(j, r, p) + big_lambda(j, r, p);
          set(r, s, j, -(a0c0inv_[r] * d));
        }
      if (order == EvalOrder::OffDiagonalFirst) diagonal_pass(f, j);
    }
    return x_;
  }

 private:
  void diagonal_pass(const FreeData& f, int j) {
    const SegmentSpec& spec = p_.spec;
    if (j < 1) return;
    for (int r = 0; r < spec.count(); ++r) {
      if (j > spec.alpha[r] - 1) continue;
      EMat d = xi(r, r, j, 0) + big_xi(j, r, 0) + big_lambda(j, r, 0);
      EMat rhs = p_.c.coeff[r][j] - d;
      const int tau = ((j + spec.alpha[r] + 1) % 2 == 0 ? 1 : -1) * p_.sigma();
      if (transpose(rhs) != rhs * ExactScalar(tau))
        throw std::logic_error("congruence solver: step data lost its symmetry");
      EMat g = rhs * ExactScalar::rational(1, 2) + f.zees[r][j - 1];
      set(r, r, j, a0c0inv_[r] * g);
    }
  }

  const EMat& bcoeff(int k, int j) const {
    static const EMat empty;
    if (j < 0 || j >= p_.spec.alpha[k]) return empty;  // caller skips via in_b
    return p_.b.coeff[k][j];
  }
  bool in_b(int k, int j) const { return j >= 0 && j < p_.spec.alpha[k]; }

  EMat coeff(int k, int s, int l) const {
    const SegmentSpec& spec = p_.spec;
    if (l < 0 || l >= b_min(spec, k, s)) return EMat(spec.mu[k], spec.mu[s]);
    if (!have_[k][s][l])
      throw std::logic_error("congruence solver: forward reference to coefficient (" +
                             std::to_string(k + 1) + "," + std::to_string(s + 1) + "," +
                             std::to_string(l) + ")");
    return x_.coeff(k, s, l);
  }

  void set(int r, int s, int j, EMat value) {
    x_.coeff(r, s, j) = std::move(value);
    have_[r][s][j] = 1;
  }

  // Phi^{ks}_n = sum_i B_{n-i}^k A_i^{ks}
  EMat phi(int k, int s, int n) const {
    const SegmentSpec& spec = p_.spec;
    EMat acc(spec.mu[k], spec.mu[s]);
    for (int i = 0; i <= n; ++i) {
      if (!in_b(k, n - i) || i >= b_min(spec, k, s)) continue;
      acc = acc + bcoeff(k, n - i) * coeff(k, s, i);
    }
    return acc;
  }

  // Psi^{krs}_n = sum_l (-1)^l (A_l^{kr})^T Phi^{ks}_{n-l}
  EMat psi(int k, int r, int s, int n) const {
    const SegmentSpec& spec = p_.spec;
    EMat acc(spec.mu[r], spec.mu[s]);
    if (n < 0) return acc;
    for (int l = 0; l <= n && l < b_min(spec, k, r); ++l)
      acc = acc + transpose(coeff(k, r, l)) * phi(k, s, n - l) * ExactScalar(l % 2 == 0 ? 1 : -1);
    return acc;
  }

#ifndef NDEBUG
  void check_psi_symmetry(const EMat& value, int k, int n) const {
    // (Psi^{krr}_n)^T = sigma * (-1)^{alpha_k + n + 1} Psi^{krr}_n
    const int sign = ((p_.spec.alpha[k] + n + 1) % 2 == 0 ? 1 : -1) * p_.sigma();
    assert(transpose(value) == value * ExactScalar(sign));
  }
#endif

  // Known part of Psi^{rrs}_j once the unknown coefficient is split off.
  EMat xi(int r, int s, int j, int p) const {
    const SegmentSpec& spec = p_.spec;
    EMat acc(spec.mu[r], spec.mu[s]);
    for (int i = 0; i <= j - 1; ++i) {
      if (!in_b(r, j - i) || i >= b_min(spec, r, s)) continue;
      acc = acc + bcoeff(r, j - i) * coeff(r, s, i);
    }
    acc = transpose(coeff(r, r, 0)) * acc;
    const int lmax = p == 0 ? j - 1 : j;
    for (int l = 1; l <= lmax && l < spec.alpha[r]; ++l)
      acc = acc + transpose(coeff(r, r, l)) * phi(r, s, j - l) * ExactScalar(l % 2 == 0 ? 1 : -1);
    return acc;
  }

  EMat big_xi(int j, int r, int p) const {
    const SegmentSpec& spec = p_.spec;
    const int N = spec.count(), s = r + p;
    EMat acc(spec.mu[r], spec.mu[s]);
    if (p == 0) {
      for (int k = r + 1; k < N; ++k) {
        EMat term = psi(k, r, r, j - spec.alpha[r] + spec.alpha[k]);
#ifndef NDEBUG
        check_psi_symmetry(term, k, j - spec.alpha[r] + spec.alpha[k]);
#endif
        acc = acc + term;
      }
      return acc;
    }
    for (int k = r + 1; k <= s; ++k) acc = acc + psi(k, r, s, j);
    for (int k = s + 1; k < N; ++k) acc = acc + psi(k, r, s, j - spec.alpha[s] + spec.alpha[k]);
    return acc;
  }

  // Contribution of the rows left of the diagonal. The padded shapes put the
  // alternating sign (-1)^{alpha_k - alpha_r} in front of these terms.
  EMat big_lambda(int j, int r, int p) const {
    const SegmentSpec& spec = p_.spec;
    const int s = r + p;
    EMat acc(spec.mu[r], spec.mu[s]);
    for (int k = 0; k < r; ++k) {
      const int sign = (spec.alpha[k] - spec.alpha[r]) % 2 == 0 ? 1 : -1;
      acc = acc + psi(k, r, s, j - spec.alpha[k] + spec.alpha[r]) * ExactScalar(sign);
    }
    return acc;
  }

  const CongruenceProblem& p_;
  ToeplitzElement x_;
  std::vector<std::vector<std::vector<char>>> have_;
  std::vector<EMat> a0c0inv_;
};

}  // namespace

ToeplitzElement congruence_solve(const CongruenceProblem& p, const FreeData& f, EvalOrder order) {
  p.validate();
  SolveState state(p, f);
  return state.run(f, order);
}

EMat congruence_residual(const CongruenceProblem& p, const ToeplitzElement& x) {
  EMat ff = f_block(p.spec);
  EMat xx = assemble(x);
  return alt_assemble(p.c) - ff * transpose(xx) * ff * alt_assemble(p.b) * xx;
}

EMat skew_step_solve(const EMat& a, const EMat& b, int j, const EMat& z) {
  const int bsign = j % 2 == 0 ? 1 : -1;
  if (transpose(b) != b * ExactScalar(bsign))
    fail(ErrorKind::ParityError, "right-hand side has the wrong symmetry for this j");
  if (transpose(z) != z * ExactScalar(-bsign))
    fail(ErrorKind::ParityError, "Z has the wrong symmetry for this j");
  return inverse(transpose(a)) * (z + b * ExactScalar::rational(1, 2));
}

long solution_dim(const SegmentSpec& spec) {
  spec.validate();
  long twice = 0;
  for (int r = 0; r < spec.count(); ++r) {
    const long a = spec.alpha[r], m = spec.mu[r];
    twice += m * m * a;
    for (int s = 0; s < r; ++s) twice += 2 * a * m * spec.mu[s];  // min(alpha_r, alpha_s) = alpha_r
    if (a % 2 == 1) twice -= m;
  }
  if (twice % 2 != 0) throw std::logic_error("solution dimension is not an integer");
  return twice / 2;
}

std::vector<FreeSlot> free_shape(const SegmentSpec& spec, const AltToeplitzData& b) {
  spec.validate();
  b.validate();
  std::vector<FreeSlot> slots;
  for (int r = 0; r < spec.count(); ++r)
    for (int s = 0; s < r; ++s)
      slots.push_back({"below", r, s, -1,
                       static_cast<long>(b_min(spec, r, s)) * spec.mu[r] * spec.mu[s]});
  for (int r = 0; r < spec.count(); ++r) {
    const long m = spec.mu[r];
    const bool symmetric = transpose(b.coeff[r][0]) == b.coeff[r][0];
    slots.push_back({"seed", r, -1, -1, symmetric ? m * (m - 1) / 2 : m * (m + 1) / 2});
    for (int j = 1; j <= spec.alpha[r] - 1; ++j) {
      const long dim = zee_parity(spec, b.sigma, r, j) > 0 ? m * (m + 1) / 2 : m * (m - 1) / 2;
      slots.push_back({"zee", r, -1, j, dim});
    }
  }
  return slots;
}

EMat nilpotent_b_seed(int alpha_r, int m_r) {
  if (alpha_r % 2 == 0) {
    EMat j2{{ExactScalar(0), ExactScalar(-1)}, {ExactScalar(1), ExactScalar(0)}};
    std::vector<EMat> parts(static_cast<std::size_t>(m_r), j2);
    return direct_sum(parts);
  }
  return EMat::identity(m_r) * ExactScalar(((alpha_r - 1) / 2) % 2 == 0 ? 1 : -1);
}

CongruenceProblem nilpotent_stabilizer_problem(const SegmentSpec& spec) {
  spec.validate();
  SegmentSpec tilde;
  tilde.alpha = spec.alpha;
  for (int r = 0; r < spec.count(); ++r) tilde.mu.push_back(spec.m_tilde(r));
  std::vector<std::vector<EMat>> coeff(tilde.count());
  for (int r = 0; r < tilde.count(); ++r) {
    coeff[r].assign(tilde.alpha[r], EMat(tilde.mu[r], tilde.mu[r]));
    coeff[r][0] = nilpotent_b_seed(spec.alpha[r], spec.mu[r]);
  }
  AltToeplitzData b{tilde, coeff, 1};
  b.validate();
  return {tilde, b, b};
}

// --- generator_h (declared in toeplitz.hpp) ----------------------------------

namespace {

Rational catalan_coefficient(int n) {  // a_n = -binom(2n, n) / (2^{2n+1} (n+1))
  mpz_class num;
  mpz_bin_uiui(num.get_mpz_t(), 2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  mpz_class den = (mpz_class(1) << (2 * n + 1)) * (n + 1);
  Rational a(-num, den);
  a.canonicalize();
  return a;
}

}  // namespace

ToeplitzElement generator_h(const SegmentSpec& spec, int p, int t, int k, const EMat& f,
                            const std::vector<EMat>& b, GeneratorMode mode) {
  spec.validate();
  const int N = spec.count();
  if (p < 0 || t <= p || t >= N) fail(ErrorKind::InvalidGenerator, "need 0 <= p < t < N");
  if (k < 0 || k > spec.alpha[t] - 1) fail(ErrorKind::InvalidGenerator, "need 0 <= k <= alpha_t - 1");
  if (f.rows() != spec.mu[t] || f.cols() != spec.mu[p])
    fail(ErrorKind::InvalidGenerator, "F must be m_t x m_p");
  if (static_cast<int>(b.size()) != N) fail(ErrorKind::InvalidGenerator, "need one B_r per segment");

  if (mode == GeneratorMode::Certified) {
    std::vector<std::vector<EMat>> coeff(N);
    for (int r = 0; r < N; ++r) {
      coeff[r].assign(spec.alpha[r], EMat(spec.mu[r], spec.mu[r]));
      coeff[r][0] = b[r];
    }
    AltToeplitzData bd = make_alt_data(spec, coeff);
    CongruenceProblem problem{spec, bd, bd};
    FreeData free;
    std::vector<EMat> tp(static_cast<std::size_t>(b_min(spec, t, p)), EMat(spec.mu[t], spec.mu[p]));
    tp[k] = f;
    free.below[{t, p}] = tp;
    for (int r = 0; r < N; ++r) {
      free.seeds.push_back(EMat::identity(spec.mu[r]));
      free.zees.emplace_back(static_cast<std::size_t>(spec.alpha[r] - 1),
                             EMat(spec.mu[r], spec.mu[r]));
    }
    return congruence_solve(problem, free);
  }

  ToeplitzElement e = identity_element(spec);
  e.coeff(t, p, k) = f;
  e.coeff(p, t, k) = -(inverse(b[p]) * transpose(f) * b[t]);
  const int stride = 2 * k + spec.alpha[p] - spec.alpha[t] - 1;
  if (stride >= 1) {
    EMat loop = transpose(f) * b[t] * f * inverse(b[p]);  // m_p x m_p
    EMat power = EMat::identity(spec.mu[p]);
    for (int n = 1; n * stride <= spec.alpha[p] - 1; ++n) {
      power = power * loop;
      e.coeff(p, p, n * stride) = inverse(b[p]) * power * b[p] * ExactScalar(catalan_coefficient(n - 1));
    }
  }
  return e;
}

}  // namespace orthostab
