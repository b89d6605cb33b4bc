#pragma once

#include "orthostab/isotropy.hpp"

namespace orthostab {

// Brute-force dimension of {H : H^T = -H, MH = HM}, the Lie algebra of the
// isotropy group at M. Exact rank computation on the stacked linear system.
long commutant_so_dim(const EMat& m);

// Dimension of {X : JX = XJ}.
long sylvester_nullspace_dim(const EMat& j);

// Closed-form commutant dimension of a single-eigenvalue Jordan form:
// sum of min(alpha_r, alpha_s) * m_r * m_s.
long commutant_dim_formula(const SegmentSpec& spec);

// Single-eigenvalue Jordan assembly J = sum_r sum_{j<m_r} J_{alpha_r}(lambda).
EMat single_eigenvalue_jordan(const SegmentSpec& spec, const ExactScalar& lambda);

// True when {X : JX = XJ} and {X : e^J X = X e^J} coincide, checked as
// dimension equality plus basis containment. Needs a field value for e^lambda.
bool exp_commutant_check(const SegmentSpec& spec, const ExactScalar& lambda,
                         const ExactScalar& exp_lambda);

// All segment specs whose weighted size stays within the bound. Weight of one
// copy of a segment: 2*alpha (pair cases), alpha * (1 or 2 by parity)
// (nilpotent cases), or plain alpha (single-eigenvalue sweeps).
enum class SpecWeight { Pair, Nilpotent, Plain };
std::vector<SegmentSpec> enumerate_specs(int max_total, SpecWeight weight);

struct SweepRow {
  CanonicalSpec spec;
  long formula = 0;
  long oracle = 0;
  bool match = false;
};

// Exhaustive formula-vs-oracle comparison over both canonical cases.
std::vector<SweepRow> dimension_sweep(int max_size);

}  // namespace orthostab
