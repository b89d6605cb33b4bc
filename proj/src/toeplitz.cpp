#include "orthostab/toeplitz.hpp"

#include <string>

namespace orthostab {

namespace {

int delta(const SegmentSpec& spec, int r, int s) {
  return std::max(0, spec.alpha[s] - spec.alpha[r]);
}

int segment_offset(const SegmentSpec& spec, int r) {
  int off = 0;
  for (int k = 0; k < r; ++k) off += spec.alpha[k] * spec.mu[k];
  return off;
}

}  // namespace

int toeplitz_size(const SegmentSpec& spec) {
  return segment_offset(spec, spec.count());
}

ToeplitzElement zero_patterned(const SegmentSpec& spec) {
  spec.validate();
  ToeplitzElement e;
  e.spec = spec;
  const int N = spec.count();
  e.blocks.resize(N);
  for (int r = 0; r < N; ++r) {
    e.blocks[r].resize(N);
    for (int s = 0; s < N; ++s)
      e.blocks[r][s].assign(b_min(spec, r, s), EMat(spec.mu[r], spec.mu[s]));
  }
  return e;
}

ToeplitzElement identity_element(const SegmentSpec& spec) {
  ToeplitzElement e = zero_patterned(spec);
  for (int r = 0; r < spec.count(); ++r) e.coeff(r, r, 0) = EMat::identity(spec.mu[r]);
  return e;
}

EMat assemble(const ToeplitzElement& e) {
  const SegmentSpec& spec = e.spec;
  const int n = toeplitz_size(spec);
  EMat m(n, n);
  for (int r = 0; r < spec.count(); ++r)
    for (int s = 0; s < spec.count(); ++s) {
      const int d = delta(spec, r, s), b = b_min(spec, r, s);
      for (int u = 0; u < spec.alpha[r]; ++u)
        for (int v = 0; v < spec.alpha[s]; ++v) {
          const int j = v - u - d;
          if (j < 0 || j >= b) continue;
          m.set_block(segment_offset(spec, r) + u * spec.mu[r],
                      segment_offset(spec, s) + v * spec.mu[s], e.coeff(r, s, j));
        }
    }
  return m;
}

bool matches_pattern(const SegmentSpec& spec, const EMat& m, std::pair<int, int>* where) {
  const int n = toeplitz_size(spec);
  if (m.rows() != n || m.cols() != n) fail(ErrorKind::ShapeError, "matrix size does not fit spec");
  for (int r = 0; r < spec.count(); ++r)
    for (int s = 0; s < spec.count(); ++s) {
      const int d = delta(spec, r, s), b = b_min(spec, r, s);
      const int mr = spec.mu[r], ms = spec.mu[s];
      for (int u = 0; u < spec.alpha[r]; ++u)
        for (int v = 0; v < spec.alpha[s]; ++v) {
          const int j = v - u - d;
          const int i0 = segment_offset(spec, r) + u * mr;
          const int j0 = segment_offset(spec, s) + v * ms;
          for (int a = 0; a < mr; ++a)
            for (int c = 0; c < ms; ++c) {
              ExactScalar expected;
              if (j >= 0 && j < b) {
                // compare against the leading occurrence of coefficient j
                expected = m(segment_offset(spec, r) + a,
                             segment_offset(spec, s) + (j + d) * ms + c);
              }
              if (m(i0 + a, j0 + c) != expected) {
                if (where) *where = {i0 + a, j0 + c};
                return false;
              }
            }
        }
    }
  return true;
}

ToeplitzElement extract(const SegmentSpec& spec, const EMat& m) {
  std::pair<int, int> where{-1, -1};
  if (!matches_pattern(spec, m, &where))
    fail(ErrorKind::NotInGroup, "pattern violation at entry (" + std::to_string(where.first) +
                                    ", " + std::to_string(where.second) + ")");
  ToeplitzElement e = zero_patterned(spec);
  for (int r = 0; r < spec.count(); ++r)
    for (int s = 0; s < spec.count(); ++s) {
      const int d = delta(spec, r, s), b = b_min(spec, r, s);
      for (int j = 0; j < b; ++j)
        e.coeff(r, s, j) = m.block(segment_offset(spec, r),
                                   segment_offset(spec, s) + (j + d) * spec.mu[s], spec.mu[r],
                                   spec.mu[s]);
    }
  // The assembly is invertible precisely when the diagonal seeds are: grading
  // by chain depth makes it segment-upper-triangular with the seeds repeated
  // alpha_r times on the diagonal.
  for (int r = 0; r < spec.count(); ++r)
    if (det_exact(e.coeff(r, r, 0)).is_zero())
      fail(ErrorKind::NotInGroup, "singular diagonal seed in segment " + std::to_string(r + 1));
  return e;
}

ToeplitzElement group_product(const ToeplitzElement& x, const ToeplitzElement& y) {
  if (x.spec.alpha != y.spec.alpha || x.spec.mu != y.spec.mu)
    fail(ErrorKind::ShapeError, "group product across different specs");
  return extract(x.spec, assemble(x) * assemble(y));
}

ToeplitzElement group_inverse(const ToeplitzElement& x) {
  return extract(x.spec, inverse(assemble(x)));
}

std::pair<ToeplitzElement, ToeplitzElement> semidirect_factor(const ToeplitzElement& x) {
  ToeplitzElement d = zero_patterned(x.spec);
  for (int r = 0; r < x.spec.count(); ++r) d.coeff(r, r, 0) = x.coeff(r, r, 0);
  ToeplitzElement u = extract(x.spec, inverse(assemble(d)) * assemble(x));
  return {d, u};
}

ToeplitzElement random_element(const SegmentSpec& spec, Rng& rng) {
  ToeplitzElement e = zero_patterned(spec);
  for (int r = 0; r < spec.count(); ++r)
    for (int s = 0; s < spec.count(); ++s)
      for (int j = 0; j < b_min(spec, r, s); ++j)
        e.coeff(r, s, j) = (r == s && j == 0) ? rng.nonsingular_matrix(spec.mu[r])
                                              : rng.matrix(spec.mu[r], spec.mu[s]);
  return e;
}

EMat segment_omega(const SegmentSpec& spec, const std::vector<int>& mult) {
  std::vector<EMat> parts;
  for (int r = 0; r < spec.count(); ++r) parts.push_back(omega(spec.alpha[r], mult[r]));
  return direct_sum(parts);
}

EMat reshuffle(const SegmentSpec& spec, const EMat& x_structured) {
  spec.validate();
  EMat om = segment_omega(spec, spec.mu);
  EMat res = transpose(om) * x_structured * om;
  std::pair<int, int> where{-1, -1};
  if (!matches_pattern(spec, res, &where))
    fail(ErrorKind::NotInGroup, "reshuffled matrix leaves the block-Toeplitz pattern at (" +
                                    std::to_string(where.first) + ", " +
                                    std::to_string(where.second) + ")");
  return res;
}

EMat unshuffle(const SegmentSpec& spec, const EMat& x_patterned) {
  spec.validate();
  EMat om = segment_omega(spec, spec.mu);
  return om * x_patterned * transpose(om);
}

int parity_sign(const AltToeplitzData& d, int r, int j) {
  int s = (d.spec.alpha[r] + j + 1) % 2 == 0 ? 1 : -1;
  return s * d.sigma;
}

void AltToeplitzData::validate() const {
  spec.validate();
  if (sigma != 1 && sigma != -1) fail(ErrorKind::ParityError, "sigma must be +-1");
  if (static_cast<int>(coeff.size()) != spec.count())
    fail(ErrorKind::ShapeError, "alternating data needs one coefficient list per segment");
  for (int r = 0; r < spec.count(); ++r) {
    if (static_cast<int>(coeff[r].size()) != spec.alpha[r])
      fail(ErrorKind::ShapeError, "segment " + std::to_string(r + 1) + " needs alpha_r coefficients");
    for (int j = 0; j < spec.alpha[r]; ++j) {
      const EMat& m = coeff[r][j];
      if (m.rows() != spec.mu[r] || m.cols() != spec.mu[r])
        fail(ErrorKind::ShapeError, "coefficient shape mismatch");
      const int sign = parity_sign(*this, r, j);
      if (transpose(m) != m * ExactScalar(sign))
        fail(ErrorKind::ParityError, "coefficient (r=" + std::to_string(r + 1) +
                                         ", j=" + std::to_string(j) + ") breaks the parity rule");
    }
    if (det_exact(coeff[r][0]).is_zero())
      fail(ErrorKind::ParityError, "leading coefficient must be nonsingular");
  }
}

AltToeplitzData make_alt_data(const SegmentSpec& spec, std::vector<std::vector<EMat>> coeff) {
  AltToeplitzData d{spec, std::move(coeff), 1};
  for (int sigma : {1, -1}) {
    d.sigma = sigma;
    try {
      d.validate();
      return d;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ParityError) throw;
    }
  }
  fail(ErrorKind::ParityError, "coefficients fit neither parity convention");
}

EMat alt_toeplitz(const std::vector<EMat>& coeff) {
  const int alpha = static_cast<int>(coeff.size());
  const int m = coeff[0].rows(), mc = coeff[0].cols();
  EMat t(alpha * m, alpha * mc);
  for (int u = 0; u < alpha; ++u)
    for (int v = u; v < alpha; ++v)
      t.set_block(u * m, v * mc, coeff[v - u] * ExactScalar(u % 2 == 0 ? 1 : -1));
  return t;
}

EMat alt_assemble(const AltToeplitzData& d) {
  d.validate();
  std::vector<EMat> parts;
  for (int r = 0; r < d.spec.count(); ++r) parts.push_back(alt_toeplitz(d.coeff[r]));
  return direct_sum(parts);
}

EMat f_block(const SegmentSpec& spec) {
  std::vector<EMat> parts;
  for (int r = 0; r < spec.count(); ++r) parts.push_back(e_block(spec.alpha[r], spec.mu[r]));
  return direct_sum(parts);
}

ToeplitzElement generator_w(const SegmentSpec& spec, const std::vector<EMat>& b,
                            const std::vector<std::vector<EMat>>& z) {
  spec.validate();
  const int N = spec.count();
  if (static_cast<int>(b.size()) != N || static_cast<int>(z.size()) != N)
    fail(ErrorKind::ShapeError, "need one B_r and one Z list per segment");
  ToeplitzElement e = identity_element(spec);
  for (int r = 0; r < N; ++r) {
    const int alpha = spec.alpha[r], m = spec.mu[r];
    const int bsign = alpha % 2 == 1 ? 1 : -1;  // symmetric for odd alpha
    if (b[r].rows() != m || b[r].cols() != m || transpose(b[r]) != b[r] * ExactScalar(bsign))
      fail(ErrorKind::ParityError, "B_" + std::to_string(r + 1) + " has the wrong symmetry");
    if (det_exact(b[r]).is_zero())
      fail(ErrorKind::ParityError, "B_" + std::to_string(r + 1) + " is singular");
    if (static_cast<int>(z[r].size()) != alpha - 1)
      fail(ErrorKind::ShapeError, "segment " + std::to_string(r + 1) + " needs alpha_r - 1 Z blocks");
    EMat binv = alpha > 1 ? inverse(b[r]) : EMat::identity(m);
    std::vector<EMat> w(static_cast<std::size_t>(alpha), EMat(m, m));
    for (int j = 1; j <= alpha - 1; ++j) {
      const EMat& zj = z[r][j - 1];
      const int zsign = (spec.alpha[r] + j) % 2 == 0 ? 1 : -1;
      if (zj.rows() != m || zj.cols() != m || transpose(zj) != zj * ExactScalar(zsign))
        fail(ErrorKind::ParityError, "Z_" + std::to_string(j) + "^" + std::to_string(r + 1) +
                                         " has the wrong symmetry");
      EMat acc(m, m);
      for (int k = 1; k <= j - 1; ++k)
        acc = acc + transpose(w[k]) * b[r] * w[j - k] * ExactScalar(k % 2 == 0 ? 1 : -1);
      w[j] = binv * (zj - acc * ExactScalar::rational(1, 2));
      e.coeff(r, r, j) = w[j];
    }
  }
  return e;
}

// generator_h lives in solver.cpp: the certified mode runs the congruence solver.

}  // namespace orthostab
