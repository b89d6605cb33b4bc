#include <doctest.h>

#include "orthostab/canonical.hpp"
#include "orthostab/rng.hpp"
#include "support.hpp"

using namespace orthostab;
using namespace orthostab::testing;

namespace {

ExactScalar half() { return rat(1, 2); }
ExactScalar ihalf() { return ei() * rat(1, 2); }

}  // namespace

TEST_CASE("jordan blocks") {
  CHECK(jordan_block(1, ExactScalar(5)) == EMat{{ExactScalar(5)}});
  CHECK(jordan_block(2, ExactScalar()) ==
        EMat{{ExactScalar(), ExactScalar(1)}, {ExactScalar(), ExactScalar()}});
  EMat n = jordan_block(3, rat(7, 3)) - EMat::identity(3) * rat(7, 3);
  CHECK(!(n * n).is_zero());
  CHECK((n * n * n).is_zero());
}

TEST_CASE("pair block k_block") {
  // 2x2 case: [[0, i l], [-i l, 0]]
  ExactScalar l = rat(3, 2);
  CHECK(k_block(1, l) == EMat{{ExactScalar(), ei() * l}, {-(ei() * l), ExactScalar()}});

  Rng rng(2);
  for (int m = 1; m <= 5; ++m) {
    EMat k = k_block(m, rng.scalar());
    CHECK(transpose(k) == -k);
  }

  // expansion of the 4x4 zero-eigenvalue pair block
  EMat k20 = k_block(2, ExactScalar());
  EMat expected{{ExactScalar(), half(), ihalf(), ExactScalar()},
                {-half(), ExactScalar(), ExactScalar(), ihalf()},
                {-ihalf(), ExactScalar(), ExactScalar(), -half()},
                {ExactScalar(), -ihalf(), half(), ExactScalar()}};
  CHECK(k20 == expected);
  // its Jordan type is two 2x2 nilpotent blocks: rank 2, square zero
  CHECK(power_ranks(k20) == std::vector<int>{2, 0});
}

TEST_CASE("odd nilpotent block l_block") {
  CHECK(l_block(1) == EMat(1, 1));
  CHECK_THROWS_AS(l_block(4), Error);

  EMat l3 = l_block(3);
  EMat expected{{ExactScalar(), half() + ihalf(), ExactScalar()},
                {-half() - ihalf(), ExactScalar(), -half() + ihalf()},
                {ExactScalar(), half() - ihalf(), ExactScalar()}};
  CHECK(l3 == expected);

  // twice this block is the 3x3 skew model matrix with entries 1 + i, -1 + i
  EMat doubled = l3 * ExactScalar(2);
  CHECK(doubled(0, 1) == ExactScalar(1) + ei());
  CHECK(doubled(1, 2) == ExactScalar(-1) + ei());

  for (int n : {3, 5, 7}) {
    EMat l = l_block(n);
    CHECK(transpose(l) == -l);
    std::vector<int> ranks = power_ranks(l);
    // single Jordan block of size n: ranks n-1, n-2, ..., 0
    CHECK(static_cast<int>(ranks.size()) == n);
    for (int k = 0; k < n; ++k) CHECK(ranks[k] == n - 1 - k);
  }
}

TEST_CASE("canonical assemblies") {
  CHECK(assemble_canonical(nilpotent_spec({1}, {4})) == EMat(4, 4));

  ExactScalar l = rat(-2, 3);
  CHECK(assemble_canonical(nonzero_spec({1}, {1}, l)) ==
        EMat{{ExactScalar(), ei() * l}, {-(ei() * l), ExactScalar()}});

  EMat m = assemble_canonical(nilpotent_spec({2, 1}, {1, 1}));
  CHECK(m.rows() == 5);
  CHECK(m == direct_sum<ExactScalar>({k_block(2, ExactScalar()), l_block(1)}));
  // Jordan type J_2 + J_2 + J_1: rank drops 5 -> 2 -> 0
  CHECK(power_ranks(m) == std::vector<int>{2, 0});

  CHECK_THROWS_AS(assemble_canonical(nonzero_spec({1}, {1}, ExactScalar())), Error);
}

TEST_CASE("skew symmetry of every assembled form") {
  for (auto alpha : std::vector<std::vector<int>>{{1}, {2}, {3}, {2, 1}, {3, 2}, {4, 2, 1}}) {
    std::vector<int> mu(alpha.size(), 1);
    EMat a = assemble_canonical(nilpotent_spec(alpha, mu));
    CHECK(transpose(a) == -a);
    EMat b = assemble_canonical(nonzero_spec(alpha, mu, rat(5, 3)));
    CHECK(transpose(b) == -b);
  }
}

TEST_CASE("orthogonality of exponential forms") {
  for (int eps : {1, -1}) {
    EMat o = assemble_canonical(unipotent_spec({3, 2}, {1, 2}, eps));
    CHECK(transpose(o) * o == EMat::identity(o.rows()));
  }
  // exact orth-generic form with e^lambda = i (lambda = i pi / 2)
  CanonicalSpec og;
  og.kind = CanonicalCase::OrthogonalGeneric;
  og.segments = seg({2, 1}, {1, 1});
  og.lambda = ExactScalar(1);  // informational; the exact route only uses e^lambda
  og.exp_lambda = ei();
  EMat o = assemble_canonical(og);
  CHECK(transpose(o) * o == EMat::identity(6));

  CanonicalSpec no_exp = og;
  no_exp.exp_lambda.reset();
  CHECK_THROWS_AS(assemble_canonical(no_exp), Error);
  CHECK(max_abs(assemble_canonical_float(no_exp)) > 0);  // float route exists
}

TEST_CASE("nilpotent assemblies have the declared Jordan partition") {
  for (auto alpha : std::vector<std::vector<int>>{{1}, {2}, {3}, {2, 1}, {3, 2}, {4, 1}, {5, 3}}) {
    for (int m : {1, 2}) {
      std::vector<int> mu(alpha.size(), m);
      CanonicalSpec spec = nilpotent_spec(alpha, mu);
      if (spec.size() > 10) continue;
      // block sizes: alpha_r repeated m_tilde(r) times
      std::vector<int> sizes;
      for (std::size_t r = 0; r < alpha.size(); ++r)
        for (int k = 0; k < spec.segments.m_tilde(static_cast<int>(r)); ++k)
          sizes.push_back(alpha[r]);
      EMat a = assemble_canonical(spec);
      EMat power = a;
      for (int k = 1; k <= alpha[0]; ++k) {
        int expected = 0;
        for (int s : sizes) expected += std::max(0, s - k);
        CHECK(rank_exact(power) == expected);
        power = power * a;
      }
    }
  }
}

TEST_CASE("transition matrices conjugate canonical forms to Jordan forms") {
  // alpha = (1): S is the 2x2 block with rows (1, i), (-i, -1) over sqrt2
  EMat s1 = transition(nonzero_spec({1}, {1}));
  ExactScalar is = ExactScalar::inv_sqrt2();
  EMat expected{{is, ei() * is}, {-(ei() * is), -is}};
  CHECK(s1 == expected);

  ExactScalar l = rat(4, 7);
  CHECK(s1 * k_block(1, l) * inverse(s1) ==
        direct_sum<ExactScalar>({jordan_block(1, l), jordan_block(1, -l)}));

  // odd nilpotent: S = R_3 P_3 sends L_3 to J_3(0)
  CanonicalSpec n3 = nilpotent_spec({3}, {1});
  EMat s3 = transition(n3);
  CHECK(s3 * l_block(3) * inverse(s3) == jordan_block(3, ExactScalar()));

  // all small specs, both cases
  for (auto alpha : std::vector<std::vector<int>>{{1}, {2}, {3}, {4}, {2, 1}, {3, 1}, {3, 2}}) {
    for (int m : {1, 2}) {
      std::vector<int> mu(alpha.size(), m);
      CanonicalSpec nz = nonzero_spec(alpha, mu, rat(3, 2));
      if (nz.size() <= 12) {
        EMat s = transition(nz);
        CHECK(s * assemble_canonical(nz) * inverse(s) == jordan_assembly(nz));
      }
      CanonicalSpec np = nilpotent_spec(alpha, mu);
      if (np.size() <= 12) {
        EMat s = transition(np);
        CHECK(s * assemble_canonical(np) * inverse(s) == jordan_assembly(np));
      }
    }
  }
}

TEST_CASE("omega permutations") {
  CHECK(omega(1, 3) == EMat::identity(3));
  CHECK(omega(4, 1) == EMat::identity(4));
  Rng rng(23);
  for (int t = 0; t < 8; ++t) {
    int alpha = 1 + static_cast<int>(rng.below(6)), m = 1 + static_cast<int>(rng.below(4));
    EMat om = omega(alpha, m);
    CHECK(transpose(om) * om == EMat::identity(alpha * m));
  }
}

TEST_CASE("omega regroups rectangular Toeplitz grids") {
  // 6x6 grid: 2x3 blocks of 3x2 pieces [T(a, b); 0]
  auto a = [](int k) { return ExactScalar(k); };
  auto b = [](int k) { return ExactScalar(10 + k); };
  EMat x(6, 6);
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 3; ++k) {
      int idx = j * 3 + k + 1;
      x(3 * j + 0, 2 * k + 0) = a(idx);
      x(3 * j + 0, 2 * k + 1) = b(idx);
      x(3 * j + 1, 2 * k + 1) = a(idx);
    }
  EMat res = transpose(omega(3, 2)) * x * omega(2, 3);
  EMat expected(6, 6);
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 3; ++k) {
      int idx = j * 3 + k + 1;
      expected(j, k) = a(idx);        // A_0 block on rows 0..1
      expected(j, 3 + k) = b(idx);    // A_1 block
      expected(2 + j, 3 + k) = a(idx);
    }
  CHECK(res == expected);
}

TEST_CASE("omega_tilde groups eigenvalue pairs") {
  CHECK(omega_tilde(seg({1}, {1})) == EMat::identity(2));

  // diag(l, -l, l, -l) -> diag(l, l, -l, -l)
  ExactScalar l = rat(5);
  EMat d(4, 4);
  d(0, 0) = l; d(1, 1) = -l; d(2, 2) = l; d(3, 3) = -l;
  EMat ot = omega_tilde(seg({1}, {2}));
  EMat g = transpose(ot) * d * ot;
  EMat expected(4, 4);
  expected(0, 0) = l; expected(1, 1) = l; expected(2, 2) = -l; expected(3, 3) = -l;
  CHECK(g == expected);

  for (auto alpha : std::vector<std::vector<int>>{{1}, {2, 1}, {3, 1}}) {
    std::vector<int> mu(alpha.size(), 2);
    EMat om = omega_tilde(seg(alpha, mu));
    CHECK(transpose(om) * om == EMat::identity(om.rows()));
  }

  // conjugation sends the pairwise Jordan form to the plus/minus grouped one
  CanonicalSpec spec = nonzero_spec({2, 1}, {2, 1}, rat(3));
  EMat jordan = jordan_assembly(spec);
  EMat ot2 = omega_tilde(spec.segments);
  std::vector<EMat> plus, minus;
  for (int r = 0; r < spec.segments.count(); ++r)
    for (int j = 0; j < spec.segments.mu[r]; ++j) {
      plus.push_back(jordan_block(spec.segments.alpha[r], spec.lambda));
      minus.push_back(jordan_block(spec.segments.alpha[r], -spec.lambda));
    }
  EMat grouped = direct_sum<ExactScalar>({direct_sum(plus), direct_sum(minus)});
  CHECK(transpose(ot2) * jordan * ot2 == grouped);
}

TEST_CASE("nilpotent exponential") {
  CHECK(exp_nilpotent(EMat(3, 3)) == EMat::identity(3));
  CHECK(exp_nilpotent(jordan_block(2, ExactScalar())) ==
        EMat{{ExactScalar(1), ExactScalar(1)}, {ExactScalar(), ExactScalar(1)}});
  CHECK_THROWS_AS(exp_nilpotent(EMat::identity(2)), Error);

  // e^{S^-1 A S} = S^-1 e^A S
  Rng rng(31);
  EMat a(3, 3);
  a(0, 1) = rng.scalar();
  a(0, 2) = rng.scalar();
  a(1, 2) = rng.scalar();
  EMat s = rng.nonsingular_matrix(3);
  CHECK(exp_nilpotent(inverse(s) * a * s) == inverse(s) * exp_nilpotent(a) * s);
}

TEST_CASE("rotation block orientation") {
  // e^{K_1(-i phi)} is the rotation [[cos, sin], [-sin, cos]]
  double phi = 0.7;
  FMat rot = exp_k_block_float(1, FloatScalar(0, -phi));
  CHECK(rot(0, 0).real() == doctest::Approx(std::cos(phi)));
  CHECK(rot(0, 1).real() == doctest::Approx(std::sin(phi)));
  CHECK(rot(1, 0).real() == doctest::Approx(-std::sin(phi)));
  CHECK(std::abs(rot(0, 0).imag()) < 1e-15);

  // exact route with e^lambda = i gives an exactly orthogonal block
  EMat o = exp_k_block(2, ExactScalar(1), ei());
  CHECK(transpose(o) * o == EMat::identity(4));
}
