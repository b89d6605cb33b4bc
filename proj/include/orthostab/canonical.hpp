#pragma once

#include <optional>
#include <vector>

#include "orthostab/matrix.hpp"

namespace orthostab {

// Jordan segment sizes and multiplicities: alpha_1 > ... > alpha_N with
// multiplicity m_r per size. m_tilde doubles m_r on even segments.
struct SegmentSpec {
  std::vector<int> alpha;
  std::vector<int> mu;

  int count() const { return static_cast<int>(alpha.size()); }
  int m_tilde(int r) const { return alpha[r] % 2 == 0 ? 2 * mu[r] : mu[r]; }
  void validate() const;
};

enum class CanonicalCase { NonzeroPair, Nilpotent, OrthogonalGeneric, UnipotentSigned };

struct CanonicalSpec {
  CanonicalCase kind = CanonicalCase::Nilpotent;
  SegmentSpec segments;
  ExactScalar lambda;                      // NonzeroPair / OrthogonalGeneric
  std::optional<ExactScalar> exp_lambda;   // exact e^lambda when field-valued
  int epsilon = 1;                         // UnipotentSigned

  void validate() const;
  bool pair_case() const {
    return kind == CanonicalCase::NonzeroPair || kind == CanonicalCase::OrthogonalGeneric;
  }
  // Size of the assembled canonical matrix.
  int size() const;
};

// --- elementary blocks -------------------------------------------------------

template <typename S>
Mat<S> jordan_block(int m, const S& lambda) {
  if (m < 1) fail(ErrorKind::InvalidBlock, "jordan block size must be positive");
  Mat<S> j(m, m);
  for (int k = 0; k < m; ++k) {
    j(k, k) = lambda;
    if (k + 1 < m) j(k, k + 1) = S(1);
  }
  return j;
}

EMat backward_identity(int n);           // E_n
EMat sign_alternator(int n);             // F_n = diag(-1, +1, -1, ...)
EMat e_block(int alpha, int m);          // E_alpha(I_m)
EMat f_alt_block(int alpha, int m);      // diag(+I_m, -I_m, ...), alpha blocks

EMat m_block(int m);                             // skew tridiagonal factor of K_m
EMat n_block(int m, const ExactScalar& lambda);  // anti-diagonal factor of K_m
EMat k_block(int m, const ExactScalar& lambda);  // 2m x 2m canonical pair block
EMat l_block(int n);                             // odd nilpotent block, n = 2m-1

// --- permutations ------------------------------------------------------------

EMat perm_matrix(const std::vector<int>& sigma);  // column c = e_{sigma(c)}
std::vector<int> omega_perm(int alpha, int m);
EMat omega(int alpha, int m);        // Omega_{alpha,m}
EMat omega_tilde(const SegmentSpec& spec);  // pairs-regrouping permutation

// --- assemblies ---------------------------------------------------------------

// Jordan form matching assemble_canonical: pairs J(lambda) + J(-lambda) for the
// pair cases, J(0) blocks (doubled on even segments) for the nilpotent cases.
EMat jordan_assembly(const CanonicalSpec& spec);

// Transition S with S * canonical * S^-1 = jordan_assembly, entries in Q(i,sqrt2).
EMat transition(const CanonicalSpec& spec);

EMat assemble_canonical(const CanonicalSpec& spec);

// Float assembly; the only case that genuinely needs it is OrthogonalGeneric
// with transcendental e^lambda.
FMat assemble_canonical_float(const CanonicalSpec& spec);

// --- exponentials --------------------------------------------------------------

// Exact truncated series for nilpotent input; NotNilpotent otherwise.
EMat exp_nilpotent(const EMat& b);

// exp of a block with constant eigenvalue: exp_lambda * e^{b - lambda I};
// b - lambda I must be nilpotent.
EMat exp_shifted(const EMat& b, const ExactScalar& lambda, const ExactScalar& exp_lambda);

// e^{K_alpha(lambda)} with caller-supplied e^lambda (exact route).
EMat exp_k_block(int alpha, const ExactScalar& lambda, const ExactScalar& exp_lambda);
FMat exp_k_block_float(int alpha, FloatScalar lambda);

}  // namespace orthostab
