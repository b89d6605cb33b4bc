#include "orthostab/isotropy.hpp"

namespace orthostab {

namespace {

Certificate certify_exact(const EMat& m, const EMat& q) {
  Certificate cert;
  cert.exact = true;
  EMat qt = transpose(q);
  EMat orth = qt * q - EMat::identity(q.rows());
  EMat stab = qt * m * q - m;
  cert.orthogonal = orth.is_zero();
  cert.stabilizes = stab.is_zero();
  cert.orth_residual = cert.orthogonal ? 0.0 : max_abs(to_float(orth));
  cert.stab_residual = cert.stabilizes ? 0.0 : max_abs(to_float(stab));
  return cert;
}

ExactScalar real_part(const ExactScalar& x) { return {x.a, x.b, Rational(0), Rational(0)}; }
ExactScalar imag_part(const ExactScalar& x) { return {x.c, x.d, Rational(0), Rational(0)}; }

EMat entrywise_conj(const EMat& m) {
  EMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).conj();
  return r;
}

bool entrywise_real(const EMat& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_real()) return false;
  return true;
}

}  // namespace

Certificate verify(const EMat& m, const EMat& q) {
  if (!m.square() || m.rows() != q.rows() || !q.square())
    fail(ErrorKind::ShapeError, "verify needs square matrices of equal size");
  return certify_exact(m, q);
}

Certificate verify(const FMat& m, const FMat& q, double tol) {
  if (!m.square() || m.rows() != q.rows() || !q.square())
    fail(ErrorKind::ShapeError, "verify needs square matrices of equal size");
  Certificate cert;
  cert.exact = false;
  FMat qt = transpose(q);
  cert.orth_residual = max_abs(qt * q - FMat::identity(q.rows()));
  cert.stab_residual = max_abs(qt * m * q - m);
  cert.orthogonal = cert.orth_residual <= tol;
  cert.stabilizes = cert.stab_residual <= tol;
  return cert;
}

EMat psi(const CanonicalSpec& spec) {
  spec.validate();
  const SegmentSpec& seg = spec.segments;
  if (!spec.pair_case()) {
    std::vector<int> tilde;
    for (int r = 0; r < seg.count(); ++r) tilde.push_back(seg.m_tilde(r));
    return transpose(segment_omega(seg, tilde)) * transition(spec);
  }
  const int n = toeplitz_size(seg);
  EMat s = transition(spec);
  EMat otilde = omega_tilde(seg);
  EMat om = segment_omega(seg, seg.mu);
  // B_1 = sum over blocks of E_alpha * F_alpha, reshuffled through Omega.
  std::vector<EMat> parts;
  for (int r = 0; r < seg.count(); ++r) {
    EMat ef = backward_identity(seg.alpha[r]) * sign_alternator(seg.alpha[r]);
    for (int j = 0; j < seg.mu[r]; ++j) parts.push_back(ef);
  }
  EMat b1 = transpose(om) * direct_sum(parts) * om;
  EMat head(2 * n, 2 * n);
  head.set_block(0, 0, EMat::identity(n));
  head.set_block(n, n, b1);
  EMat omom(2 * n, 2 * n);
  omom.set_block(0, 0, transpose(om));
  omom.set_block(n, n, transpose(om));
  return head * omom * transpose(otilde) * s;
}

IsotropyElement element_nonzero(const CanonicalSpec& spec, const ToeplitzElement& x,
                                double float_tol) {
  spec.validate();
  if (!spec.pair_case())
    fail(ErrorKind::InvalidSpec, "element_nonzero needs a pair-case canonical spec");
  if (x.spec.alpha != spec.segments.alpha || x.spec.mu != spec.segments.mu)
    fail(ErrorKind::ShapeError, "group element spec mismatch");
  EMat xx = assemble(x);
  EMat xinv_t = transpose(inverse(xx));  // SingularMatrix on singular input
  const int n = xx.rows();
  EMat big(2 * n, 2 * n);
  big.set_block(0, 0, xx);
  big.set_block(n, n, xinv_t);
  EMat p = psi(spec);
  EMat q = inverse(p) * big * p;
  IsotropyElement el{q, spec, {}};
  if (spec.kind == CanonicalCase::OrthogonalGeneric && !spec.exp_lambda) {
    el.cert = verify(assemble_canonical_float(spec), to_float(q), float_tol);
  } else {
    el.cert = verify(assemble_canonical(spec), q);
  }
  return el;
}

IsotropyElement element_nilpotent(const CanonicalSpec& spec, const FreeData& f) {
  spec.validate();
  if (spec.pair_case())
    fail(ErrorKind::InvalidSpec, "element_nilpotent needs a nilpotent or unipotent spec");
  CongruenceProblem problem = nilpotent_stabilizer_problem(spec.segments);
  ToeplitzElement x = congruence_solve(problem, f);
  EMat p = psi(spec);
  EMat q = inverse(p) * assemble(x) * p;
  IsotropyElement el{q, spec, {}};
  el.cert = verify(assemble_canonical(spec), q);
  return el;
}

long isotropy_dim(const CanonicalSpec& spec) {
  spec.validate();
  const SegmentSpec& seg = spec.segments;
  if (spec.pair_case()) {
    long dim = 0;
    for (int r = 0; r < seg.count(); ++r)
      for (int s = 0; s < seg.count(); ++s)
        dim += static_cast<long>(std::min(seg.alpha[r], seg.alpha[s])) * seg.mu[r] * seg.mu[s];
    return dim;
  }
  SegmentSpec tilde;
  tilde.alpha = seg.alpha;
  for (int r = 0; r < seg.count(); ++r) tilde.mu.push_back(seg.m_tilde(r));
  return solution_dim(tilde);
}

EMat so2_element(const ExactScalar& t) {
  if (t.is_zero()) fail(ErrorKind::InvalidInput, "SO_2 parameter must be nonzero");
  ExactScalar half = ExactScalar::rational(1, 2);
  ExactScalar c = (t + t.inv()) * half;
  ExactScalar s = ExactScalar::i() * (t - t.inv()) * half;
  return EMat{{c, s}, {-s, c}};
}

IsotropyElement generic_element(const std::vector<GenericBlock>& blocks, bool zero_block,
                                int zero_sign) {
  if (blocks.empty() && !zero_block) fail(ErrorKind::InvalidSpec, "empty eigenvalue data");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].lambda.is_zero()) fail(ErrorKind::NotGeneric, "zero eigenvalue in a pair block");
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (blocks[i].lambda == blocks[j].lambda || blocks[i].lambda == -blocks[j].lambda)
        fail(ErrorKind::NotGeneric, "eigenvalues collide up to sign");
  }
  if (zero_sign != 1 && zero_sign != -1) fail(ErrorKind::InvalidInput, "fixed block sign must be +-1");
  std::vector<EMat> qs, ms;
  for (const auto& blk : blocks) {
    qs.push_back(so2_element(blk.t));
    ExactScalar il = ExactScalar::i() * blk.lambda;
    ms.push_back(EMat{{ExactScalar(), il}, {-il, ExactScalar()}});
  }
  if (zero_block) {
    qs.push_back(EMat{{ExactScalar(zero_sign)}});
    ms.push_back(EMat(1, 1));
  }
  EMat q = direct_sum(qs), m = direct_sum(ms);
  CanonicalSpec tag;  // generic forms sit outside the segment machinery; spec left trivial
  tag.kind = CanonicalCase::Nilpotent;
  tag.segments = {{1}, {1}};
  IsotropyElement el{q, tag, verify(m, q)};
  return el;
}

void RealSpec::validate() const {
  if (cosine.size() != mult.size() || (orthogonal_case && sine.size() != mult.size()))
    fail(ErrorKind::InvalidSpec, "real spec lists must have matching lengths");
  if (fixed1 < 0 || fixed2 < 0 || (!orthogonal_case && fixed2 != 0))
    fail(ErrorKind::InvalidSpec, "bad fixed part sizes");
  for (std::size_t j = 0; j < cosine.size(); ++j) {
    if (mult[j] < 1) fail(ErrorKind::InvalidSpec, "multiplicities must be positive");
    if (!cosine[j].is_real() || (orthogonal_case && !sine[j].is_real()))
      fail(ErrorKind::InvalidSpec, "real canonical data must be real");
    if (!orthogonal_case && cosine[j].is_zero())
      fail(ErrorKind::InvalidSpec, "sigma must be nonzero");
    if (orthogonal_case) {
      if (cosine[j] * cosine[j] + sine[j] * sine[j] != ExactScalar(1))
        fail(ErrorKind::InvalidSpec, "cos^2 + sin^2 must equal 1 exactly");
      if (sine[j].is_zero()) fail(ErrorKind::InvalidSpec, "angle must avoid multiples of pi");
    }
    for (std::size_t k = j + 1; k < cosine.size(); ++k) {
      bool clash = orthogonal_case
                       ? cosine[j] == cosine[k] && (sine[j] == sine[k] || sine[j] == -sine[k])
                       : cosine[j] == cosine[k] || cosine[j] == -cosine[k];
      if (clash) fail(ErrorKind::InvalidSpec, "rotation parameters must be pairwise distinct");
    }
  }
}

EMat real_canonical(const RealSpec& rs) {
  rs.validate();
  std::vector<EMat> parts;
  for (std::size_t j = 0; j < rs.cosine.size(); ++j) {
    EMat blk = rs.orthogonal_case
                   ? EMat{{rs.cosine[j], rs.sine[j]}, {-rs.sine[j], rs.cosine[j]}}
                   : EMat{{ExactScalar(), rs.cosine[j]}, {-rs.cosine[j], ExactScalar()}};
    for (int k = 0; k < rs.mult[j]; ++k) parts.push_back(blk);
  }
  if (rs.fixed1 > 0)
    parts.push_back(rs.orthogonal_case ? EMat::identity(rs.fixed1) : EMat(rs.fixed1, rs.fixed1));
  if (rs.orthogonal_case && rs.fixed2 > 0) parts.push_back(EMat::identity(rs.fixed2) * ExactScalar(-1));
  return direct_sum(parts);
}

EMat real_candidate(int m, const EMat& x1) {
  if (x1.rows() != m || x1.cols() != m) fail(ErrorKind::ShapeError, "x1 must be m x m");
  EMat xinv_t = transpose(inverse(x1));
  ExactScalar half = ExactScalar::rational(1, 2);
  EMat sum = (x1 + xinv_t) * half;
  EMat dif = (x1 - xinv_t) * half * ExactScalar::i();
  EMat core(2 * m, 2 * m);
  core.set_block(0, 0, sum);
  core.set_block(0, m, dif);
  core.set_block(m, 0, -dif);
  core.set_block(m, m, sum);
  EMat om = omega(2, m);
  return om * core * transpose(om);
}

IsotropyElement real_element(const RealSpec& rs, const std::vector<EMat>& unitaries,
                             const std::vector<EMat>& orth_parts) {
  rs.validate();
  if (unitaries.size() != rs.mult.size())
    fail(ErrorKind::ShapeError, "need one unitary block per rotation group");
  const std::size_t want_fixed = rs.orthogonal_case ? 2 : 1;
  if (orth_parts.size() != want_fixed)
    fail(ErrorKind::ShapeError, "wrong number of fixed-part blocks");
  std::vector<EMat> parts;
  for (std::size_t j = 0; j < unitaries.size(); ++j) {
    const EMat& u = unitaries[j];
    const int m = rs.mult[j];
    if (u.rows() != m || u.cols() != m) fail(ErrorKind::ShapeError, "unitary block size mismatch");
    if (!(transpose(entrywise_conj(u)) * u == EMat::identity(m)))
      fail(ErrorKind::NotUnitary, "block " + std::to_string(j + 1) + " is not unitary");
    parts.push_back(real_candidate(m, entrywise_conj(u)));
  }
  std::vector<int> fixed_sizes{rs.fixed1};
  if (rs.orthogonal_case) fixed_sizes.push_back(rs.fixed2);
  for (std::size_t k = 0; k < fixed_sizes.size(); ++k) {
    const EMat& o = orth_parts[k];
    if (o.rows() != fixed_sizes[k] || o.cols() != fixed_sizes[k])
      fail(ErrorKind::ShapeError, "fixed-part block size mismatch");
    if (fixed_sizes[k] == 0) continue;
    if (!entrywise_real(o) || !(transpose(o) * o == EMat::identity(o.rows())))
      fail(ErrorKind::NotUnitary, "fixed part must be real orthogonal");
    parts.push_back(o);
  }
  EMat q = direct_sum(parts);
  CanonicalSpec tag;
  tag.kind = CanonicalCase::Nilpotent;
  tag.segments = {{1}, {1}};
  return IsotropyElement{q, tag, verify(real_canonical(rs), q)};
}

FloatElement real_element_float(const RealSpec& rs, const std::vector<FMat>& unitaries,
                                const std::vector<FMat>& orth_parts, double tol) {
  rs.validate();
  if (unitaries.size() != rs.mult.size())
    fail(ErrorKind::ShapeError, "need one unitary block per rotation group");
  std::vector<FMat> parts;
  for (std::size_t j = 0; j < unitaries.size(); ++j) {
    const FMat& u = unitaries[j];
    const int m = rs.mult[j];
    if (u.rows() != m || u.cols() != m) fail(ErrorKind::ShapeError, "unitary block size mismatch");
    FMat uh(m, m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) uh(a, b) = std::conj(u(b, a));
    if (max_abs(uh * u - FMat::identity(m)) > tol)
      fail(ErrorKind::NotUnitary, "block " + std::to_string(j + 1) + " is not unitary");
    FMat re(m, m), im(m, m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        re(a, b) = u(a, b).real();
        im(a, b) = u(a, b).imag();
      }
    FMat core(2 * m, 2 * m);
    core.set_block(0, 0, re);
    core.set_block(0, m, im);
    core.set_block(m, 0, -im);
    core.set_block(m, m, re);
    FMat om = to_float(omega(2, m));
    parts.push_back(om * core * transpose(om));
  }
  const std::size_t want_fixed = rs.orthogonal_case ? 2 : 1;
  if (orth_parts.size() != want_fixed) fail(ErrorKind::ShapeError, "wrong number of fixed-part blocks");
  std::vector<int> fixed_sizes{rs.fixed1};
  if (rs.orthogonal_case) fixed_sizes.push_back(rs.fixed2);
  for (std::size_t k = 0; k < fixed_sizes.size(); ++k) {
    if (fixed_sizes[k] == 0) continue;
    parts.push_back(orth_parts[k]);
  }
  FMat q = direct_sum(parts);
  FloatElement el{q, verify(to_float(real_canonical(rs)), q, tol)};
  return el;
}

EMat b_hamiltonian_project(const EMat& b, const EMat& h_seed) {
  if (!b.square() || b.rows() != h_seed.rows() || !h_seed.square())
    fail(ErrorKind::ShapeError, "projection needs square matrices of equal size");
  const bool symmetric = transpose(b) == b;
  const bool skew = transpose(b) == -b;
  if (!symmetric && !skew) fail(ErrorKind::InvalidInput, "B must be symmetric or skew-symmetric");
  // H^T B + B H = 0 means B H is skew for symmetric B and symmetric for skew B.
  EMat g = b * h_seed;
  ExactScalar half = ExactScalar::rational(1, 2);
  EMat projected = symmetric ? (g - transpose(g)) * half : (g + transpose(g)) * half;
  return inverse(b) * projected;
}

EMat pseudo_orthogonal_from_seed(const EMat& b, const EMat& h_seed) {
  EMat h = b_hamiltonian_project(b, h_seed);
  EMat i = EMat::identity(b.rows());
  if (det_exact(i - h).is_zero()) fail(ErrorKind::SamplingFailed, "I - H is singular");
  return (i + h) * inverse(i - h);
}

EMat pseudo_orthogonal_sample(const EMat& b, Rng& rng, int retries) {
  for (int t = 0; t < retries; ++t) {
    try {
      return pseudo_orthogonal_from_seed(b, rng.matrix(b.rows(), b.rows()));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SamplingFailed) throw;
    }
  }
  fail(ErrorKind::SamplingFailed, "no invertible Cayley seed found");
}

FreeData random_free_data(const CongruenceProblem& p, Rng& rng) {
  if (!(alt_assemble(p.b) == alt_assemble(p.c)))
    fail(ErrorKind::InvalidInput, "random free data requires C = B");
  const SegmentSpec& spec = p.spec;
  FreeData f;
  for (int r = 0; r < spec.count(); ++r)
    for (int s = 0; s < r; ++s) {
      std::vector<EMat> coeffs;
      for (int j = 0; j < b_min(spec, r, s); ++j) coeffs.push_back(rng.matrix(spec.mu[r], spec.mu[s]));
      f.below[{r, s}] = coeffs;
    }
  for (int r = 0; r < spec.count(); ++r) {
    f.seeds.push_back(pseudo_orthogonal_sample(p.b.coeff[r][0], rng));
    std::vector<EMat> zs;
    for (int j = 1; j <= spec.alpha[r] - 1; ++j)
      zs.push_back(rng.symmetric_matrix(spec.mu[r], zee_parity(spec, p.sigma(), r, j)));
    f.zees.push_back(zs);
  }
  return f;
}

std::pair<CongruenceProblem, FreeData> random_congruence_instance(const SegmentSpec& spec,
                                                                  Rng& rng, int sigma) {
  spec.validate();
  std::vector<std::vector<EMat>> bco(spec.count()), cco(spec.count());
  FreeData f;
  for (int r = 0; r < spec.count(); ++r) {
    const int m = spec.mu[r];
    for (int j = 0; j < spec.alpha[r]; ++j) {
      const int par = ((spec.alpha[r] + j + 1) % 2 == 0 ? 1 : -1) * sigma;
      if (par < 0 && m % 2 == 1 && j == 0)
        fail(ErrorKind::InvalidSpec, "no nonsingular skew seed exists at odd multiplicity");
      EMat bj = rng.symmetric_matrix(m, par);
      if (j == 0)
        for (int tries = 0; det_exact(bj).is_zero(); ++tries) {
          if (tries > 63) fail(ErrorKind::SamplingFailed, "no nonsingular leading coefficient found");
          bj = rng.symmetric_matrix(m, par);
        }
      bco[r].push_back(bj);
      cco[r].push_back(j == 0 ? EMat(m, m) : rng.symmetric_matrix(m, par));
    }
    EMat seed = rng.nonsingular_matrix(m);
    cco[r][0] = transpose(seed) * bco[r][0] * seed;
    f.seeds.push_back(seed);
  }
  AltToeplitzData b{spec, bco, sigma}, c{spec, cco, sigma};
  b.validate();
  c.validate();
  for (int r = 0; r < spec.count(); ++r)
    for (int s = 0; s < r; ++s) {
      std::vector<EMat> coeffs;
      for (int j = 0; j < b_min(spec, r, s); ++j) coeffs.push_back(rng.matrix(spec.mu[r], spec.mu[s]));
      f.below[{r, s}] = coeffs;
    }
  for (int r = 0; r < spec.count(); ++r) {
    std::vector<EMat> zs;
    for (int j = 1; j <= spec.alpha[r] - 1; ++j)
      zs.push_back(rng.symmetric_matrix(spec.mu[r], zee_parity(spec, sigma, r, j)));
    f.zees.push_back(zs);
  }
  return {CongruenceProblem{spec, b, c}, f};
}

}  // namespace orthostab
