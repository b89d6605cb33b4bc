#pragma once

#include "orthostab/solver.hpp"

namespace orthostab {

struct Certificate {
  bool exact = true;        // both residuals checked in exact arithmetic
  bool orthogonal = false;  // Q^T Q = I
  bool stabilizes = false;  // Q^T M Q = M
  double orth_residual = 0;
  double stab_residual = 0;

  bool ok() const { return orthogonal && stabilizes; }
  double residual() const { return std::max(orth_residual, stab_residual); }
};

struct IsotropyElement {
  EMat q;
  CanonicalSpec spec;
  Certificate cert;
};

Certificate verify(const EMat& m, const EMat& q);
Certificate verify(const FMat& m, const FMat& q, double tol = 1e-9);

// Conjugation that carries the structured elements into the isotropy group of
// the canonical form: Q = psi^-1 * (structured) * psi. Entries in Q(i,sqrt2).
EMat psi(const CanonicalSpec& spec);

// Pair cases (lambda != 0 and the orthogonal-generic form): the structured
// element is X + (X^-1)^T over X in the block-Toeplitz group.
IsotropyElement element_nonzero(const CanonicalSpec& spec, const ToeplitzElement& x,
                                double float_tol = 1e-9);

// Nilpotent / signed-unipotent cases: the structured element solves the
// congruence equation of nilpotent_stabilizer_problem.
IsotropyElement element_nilpotent(const CanonicalSpec& spec, const FreeData& f);

long isotropy_dim(const CanonicalSpec& spec);

// --- generic (simple-eigenvalue) elements -------------------------------------

struct GenericBlock {
  ExactScalar lambda;  // nonzero; pairwise distinct up to sign across blocks
  ExactScalar t;       // nonzero SO_2 parameter
};

// SO_2 block: diag(t, 1/t) conjugated into the stabilizer of [[0, i*l], [-i*l, 0]].
EMat so2_element(const ExactScalar& t);

IsotropyElement generic_element(const std::vector<GenericBlock>& blocks, bool zero_block = false,
                                int zero_sign = 1);

// --- real forms (skew and special orthogonal, real orthogonal stabilizers) ----

struct RealSpec {
  bool orthogonal_case = false;       // false: skew form; true: rotation form
  std::vector<ExactScalar> cosine;    // skew: sigma_j; orth: cos(phi_j)
  std::vector<ExactScalar> sine;      // orth only: sin(phi_j)
  std::vector<int> mult;
  int fixed1 = 0;                     // skew: size of the zero block; orth: +I size
  int fixed2 = 0;                     // orth: -I size

  void validate() const;
};

EMat real_canonical(const RealSpec& rs);

// Embeds unitary blocks U_j as [[Re U, Im U], [-Im U, Re U]] interleaved to
// match the canonical pairing, plus real orthogonal blocks on the fixed part.
IsotropyElement real_element(const RealSpec& rs, const std::vector<EMat>& unitaries,
                             const std::vector<EMat>& orth_parts);

struct FloatElement {
  FMat q;
  Certificate cert;
};
FloatElement real_element_float(const RealSpec& rs, const std::vector<FMat>& unitaries,
                                const std::vector<FMat>& orth_parts, double tol = 1e-9);

// The commutant-route candidate for one sigma-group; real precisely when x1 is
// unitary. Exposed so the converse direction is testable.
EMat real_candidate(int m, const EMat& x1);

// --- pseudo-orthogonal sampling -------------------------------------------------

// Projection onto {H : H^T B + B H = 0} for symmetric or skew nonsingular B.
EMat b_hamiltonian_project(const EMat& b, const EMat& h_seed);
EMat pseudo_orthogonal_from_seed(const EMat& b, const EMat& h_seed);
EMat pseudo_orthogonal_sample(const EMat& b, Rng& rng, int retries = 32);

// --- randomized instances -------------------------------------------------------

// Valid free data for a problem with C = B (seeds drawn by Cayley transform).
FreeData random_free_data(const CongruenceProblem& p, Rng& rng);

// Random parity-valid problem (B and C generally different) plus matching free
// data; sigma selects the parity convention.
std::pair<CongruenceProblem, FreeData> random_congruence_instance(const SegmentSpec& spec,
                                                                  Rng& rng, int sigma = 1);

}  // namespace orthostab
