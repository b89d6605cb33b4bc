#include "orthostab/oracle.hpp"

namespace orthostab {

namespace {

// Rows expressing MH - HM = 0 in the n^2 unknowns H_{kl}, row-major.
void append_commutator_rows(EMat& sys, int row0, const EMat& m) {
  const int n = m.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int row = row0 + i * n + j;
      for (int k = 0; k < n; ++k) {
        sys(row, k * n + j) += m(i, k);
        sys(row, i * n + k) -= m(k, j);
      }
    }
}

}  // namespace

long commutant_so_dim(const EMat& m) {
  if (!m.square()) fail(ErrorKind::ShapeError, "oracle needs a square matrix");
  const int n = m.rows();
  EMat sys(2 * n * n, n * n);
  append_commutator_rows(sys, 0, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int row = n * n + i * n + j;
      sys(row, i * n + j) += ExactScalar(1);
      sys(row, j * n + i) += ExactScalar(1);
    }
  return nullspace_dim(sys);
}

long sylvester_nullspace_dim(const EMat& j) {
  if (!j.square()) fail(ErrorKind::ShapeError, "oracle needs a square matrix");
  const int n = j.rows();
  EMat sys(n * n, n * n);
  append_commutator_rows(sys, 0, j);
  return nullspace_dim(sys);
}

long commutant_dim_formula(const SegmentSpec& spec) {
  spec.validate();
  long dim = 0;
  for (int r = 0; r < spec.count(); ++r)
    for (int s = 0; s < spec.count(); ++s)
      dim += static_cast<long>(std::min(spec.alpha[r], spec.alpha[s])) * spec.mu[r] * spec.mu[s];
  return dim;
}

EMat single_eigenvalue_jordan(const SegmentSpec& spec, const ExactScalar& lambda) {
  spec.validate();
  std::vector<EMat> parts;
  for (int r = 0; r < spec.count(); ++r)
    for (int j = 0; j < spec.mu[r]; ++j) parts.push_back(jordan_block(spec.alpha[r], lambda));
  return direct_sum(parts);
}

bool exp_commutant_check(const SegmentSpec& spec, const ExactScalar& lambda,
                         const ExactScalar& exp_lambda) {
  EMat jordan = single_eigenvalue_jordan(spec, lambda);
  std::vector<EMat> exp_parts;
  for (int r = 0; r < spec.count(); ++r)
    for (int j = 0; j < spec.mu[r]; ++j)
      exp_parts.push_back(exp_shifted(jordan_block(spec.alpha[r], lambda), lambda, exp_lambda));
  EMat exped = direct_sum(exp_parts);

  const int n = jordan.rows();
  EMat sys1(n * n, n * n), sys2(n * n, n * n);
  append_commutator_rows(sys1, 0, jordan);
  append_commutator_rows(sys2, 0, exped);
  std::vector<EMat> basis = nullspace_basis(sys1);
  if (static_cast<long>(basis.size()) != nullspace_dim(sys2)) return false;
  for (const EMat& vec : basis) {
    EMat x(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) x(i, j) = vec(i * n + j, 0);
    if (!(exped * x - x * exped).is_zero()) return false;
  }
  return true;
}

namespace {

long segment_weight(int alpha, SpecWeight weight) {
  switch (weight) {
    case SpecWeight::Pair: return 2L * alpha;
    case SpecWeight::Nilpotent: return alpha % 2 == 0 ? 2L * alpha : alpha;
    case SpecWeight::Plain: return alpha;
  }
  return alpha;
}

void enumerate_rec(int max_total, SpecWeight weight, int alpha_cap, long used, SegmentSpec& cur,
                   std::vector<SegmentSpec>& out) {
  for (int alpha = alpha_cap; alpha >= 1; --alpha) {
    const long w = segment_weight(alpha, weight);
    if (used + w > max_total) continue;
    for (int m = 1; used + w * m <= max_total; ++m) {
      cur.alpha.push_back(alpha);
      cur.mu.push_back(m);
      out.push_back(cur);
      enumerate_rec(max_total, weight, alpha - 1, used + w * m, cur, out);
      cur.alpha.pop_back();
      cur.mu.pop_back();
    }
  }
}

}  // namespace

std::vector<SegmentSpec> enumerate_specs(int max_total, SpecWeight weight) {
  std::vector<SegmentSpec> out;
  SegmentSpec cur;
  enumerate_rec(max_total, weight, max_total, 0, cur, out);
  return out;
}

std::vector<SweepRow> dimension_sweep(int max_size) {
  std::vector<SweepRow> rows;
  for (const SegmentSpec& seg : enumerate_specs(max_size, SpecWeight::Pair)) {
    SweepRow row;
    row.spec.kind = CanonicalCase::NonzeroPair;
    row.spec.segments = seg;
    row.spec.lambda = ExactScalar(1);
    row.formula = isotropy_dim(row.spec);
    row.oracle = commutant_so_dim(assemble_canonical(row.spec));
    row.match = row.formula == row.oracle;
    rows.push_back(row);
  }
  for (const SegmentSpec& seg : enumerate_specs(max_size, SpecWeight::Nilpotent)) {
    SweepRow row;
    row.spec.kind = CanonicalCase::Nilpotent;
    row.spec.segments = seg;
    row.formula = isotropy_dim(row.spec);
    row.oracle = commutant_so_dim(assemble_canonical(row.spec));
    row.match = row.formula == row.oracle;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace orthostab
