#include <doctest.h>

#include "orthostab/solver.hpp"
#include "support.hpp"

using namespace orthostab;
using namespace orthostab::testing;

TEST_CASE("single full-size segment is just GL_m") {
  SegmentSpec spec = seg({1}, {3});
  Rng rng(1);
  EMat a = rng.nonsingular_matrix(3);
  ToeplitzElement e = zero_patterned(spec);
  e.coeff(0, 0, 0) = a;
  CHECK(assemble(e) == a);
  CHECK(assemble(extract(spec, a)) == a);
}

TEST_CASE("five by five display with two segments") {
  // alpha = (3, 2), mu = (1, 1); scalar parameter blocks A..J
  SegmentSpec spec = seg({3, 2}, {1, 1});
  auto v = [](int k) { return ExactScalar(k); };
  ToeplitzElement e = zero_patterned(spec);
  e.coeff(0, 0, 0) = EMat{{v(1)}};   // A
  e.coeff(0, 0, 1) = EMat{{v(2)}};   // B
  e.coeff(0, 0, 2) = EMat{{v(3)}};   // C
  e.coeff(0, 1, 0) = EMat{{v(6)}};   // F
  e.coeff(0, 1, 1) = EMat{{v(7)}};   // G
  e.coeff(1, 0, 0) = EMat{{v(8)}};   // H
  e.coeff(1, 0, 1) = EMat{{v(9)}};   // J
  e.coeff(1, 1, 0) = EMat{{v(4)}};   // D
  e.coeff(1, 1, 1) = EMat{{v(5)}};   // E
  EMat m = assemble(e);
  EMat expected{{v(1), v(2), v(3), v(6), v(7)},
                {v(0), v(1), v(2), v(0), v(6)},
                {v(0), v(0), v(1), v(0), v(0)},
                {v(0), v(8), v(9), v(4), v(5)},
                {v(0), v(0), v(8), v(0), v(4)}};
  CHECK(m == expected);
  ToeplitzElement back = extract(spec, m);
  CHECK(assemble(back) == m);
}

TEST_CASE("pattern violations are located") {
  SegmentSpec spec = seg({2, 1}, {1, 1});
  EMat m = assemble(identity_element(spec));
  m(1, 0) = ExactScalar(1);  // breaks the zero below the Toeplitz diagonal
  std::pair<int, int> where;
  CHECK(!matches_pattern(spec, m, &where));
  CHECK(where == std::pair<int, int>{1, 0});
  CHECK_THROWS_AS(extract(spec, m), Error);

  EMat sing = assemble(identity_element(spec));
  sing(2, 2) = ExactScalar();  // singular diagonal seed
  CHECK_THROWS_AS(extract(spec, sing), Error);
}

TEST_CASE("determinant factors through the diagonal seeds") {
  // det(assemble(x)) = +- prod_r det(A_0^{rr})^{alpha_r}; in particular the
  // group is exactly the pattern with invertible seeds.
  Rng rng(57);
  for (auto alpha : std::vector<std::vector<int>>{{2, 1}, {3, 1}, {3, 2, 1}}) {
    std::vector<int> mu(alpha.size(), 2);
    SegmentSpec spec = seg(alpha, mu);
    for (int t = 0; t < 5; ++t) {
      ToeplitzElement x = random_element(spec, rng);
      ExactScalar prod(1);
      for (int r = 0; r < spec.count(); ++r)
        for (int k = 0; k < spec.alpha[r]; ++k) prod = prod * det_exact(x.coeff(r, r, 0));
      ExactScalar d = det_exact(assemble(x));
      CHECK((d == prod || d == -prod));
    }
  }
}

TEST_CASE("group closure, inverses, associativity") {
  Rng rng(12);
  for (auto alpha : std::vector<std::vector<int>>{{1}, {2}, {2, 1}, {3, 1}, {3, 2, 1}}) {
    for (int m : {1, 2}) {
      std::vector<int> mu(alpha.size(), m);
      SegmentSpec spec = seg(alpha, mu);
      for (int t = 0; t < 8; ++t) {
        ToeplitzElement x = random_element(spec, rng);
        ToeplitzElement y = random_element(spec, rng);
        ToeplitzElement z = random_element(spec, rng);
        ToeplitzElement xy = group_product(x, y);  // extraction must succeed
        CHECK(assemble(group_product(xy, z)) == assemble(group_product(x, group_product(y, z))));
        CHECK(assemble(group_product(x, group_inverse(x))) ==
              EMat::identity(toeplitz_size(spec)));
      }
    }
  }
}

TEST_CASE("semidirect factorization") {
  Rng rng(14);
  SegmentSpec spec = seg({3, 1}, {1, 1});
  ToeplitzElement d0 = identity_element(spec);
  d0.coeff(0, 0, 0) = rng.nonsingular_matrix(1);
  d0.coeff(1, 1, 0) = rng.nonsingular_matrix(1);
  auto [d1, u1] = semidirect_factor(d0);
  CHECK(assemble(d1) == assemble(d0));
  CHECK(assemble(u1) == EMat::identity(4));

  ToeplitzElement uni = random_element(spec, rng);
  for (int r = 0; r < spec.count(); ++r) uni.coeff(r, r, 0) = EMat::identity(1);
  auto [d2, u2] = semidirect_factor(uni);
  CHECK(assemble(d2) == EMat::identity(4));
  CHECK(assemble(u2) == assemble(uni));

  for (int t = 0; t < 10; ++t) {
    ToeplitzElement x = random_element(spec, rng);
    auto [d, u] = semidirect_factor(x);
    for (int r = 0; r < spec.count(); ++r) {
      CHECK(u.coeff(r, r, 0) == EMat::identity(spec.mu[r]));
      for (int s = 0; s < spec.count(); ++s)
        if (r != s)
          for (const EMat& blk : d.blocks[r][s]) CHECK(blk.is_zero());
    }
    CHECK(assemble(group_product(d, u)) == assemble(x));
  }
}

TEST_CASE("reshuffle matches the block regrouping") {
  SegmentSpec spec = seg({2}, {2});
  // grid of 2x2 upper triangular Toeplitz blocks
  Rng rng(21);
  EMat x(4, 4);
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) {
      ExactScalar a = rng.scalar(), b = rng.scalar();
      x(2 * j, 2 * k) = a;
      x(2 * j + 1, 2 * k + 1) = a;
      x(2 * j, 2 * k + 1) = b;
    }
  EMat res = reshuffle(spec, x);
  CHECK(unshuffle(spec, res) == x);
  CHECK(reshuffle(spec, assemble(identity_element(spec))) ==
        assemble(identity_element(spec)));

  // permutation similarity preserves the entry multiset
  std::vector<std::string> before, after;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      before.push_back(x(i, j).str());
      after.push_back(res(i, j).str());
    }
  std::sort(before.begin(), before.end());
  std::sort(after.begin(), after.end());
  CHECK(before == after);
}

TEST_CASE("alternating Toeplitz blocks") {
  Rng rng(33);
  EMat b0 = rng.symmetric_matrix(2, 1);
  CHECK(alt_toeplitz({b0}) == b0);

  EMat skew = rng.symmetric_matrix(2, -1);
  EMat sym = rng.symmetric_matrix(2, 1);
  EMat t = alt_toeplitz({skew, sym});
  CHECK(t.block(0, 0, 2, 2) == skew);
  CHECK(t.block(0, 2, 2, 2) == sym);
  CHECK(t.block(2, 0, 2, 2).is_zero());
  CHECK(t.block(2, 2, 2, 2) == -skew);
}

TEST_CASE("involution identity for parity-valid alternating data") {
  Rng rng(35);
  int checked = 0;
  while (checked < 500) {
    // random segment layout with valid parity data
    std::vector<int> alpha, mu;
    int top = 2 + static_cast<int>(rng.below(3));
    alpha.push_back(top);
    mu.push_back(1 + static_cast<int>(rng.below(2)));
    if (rng.below(2) == 0 && top > 1) {
      alpha.push_back(1 + static_cast<int>(rng.below(top - 1)));
      mu.push_back(1 + static_cast<int>(rng.below(2)));
    }
    SegmentSpec spec = seg(alpha, mu);
    std::vector<std::vector<EMat>> coeff(spec.count());
    bool feasible = true;
    for (int r = 0; r < spec.count() && feasible; ++r) {
      for (int j = 0; j < spec.alpha[r]; ++j) {
        int par = (spec.alpha[r] + j + 1) % 2 == 0 ? 1 : -1;
        if (j == 0 && par < 0 && spec.mu[r] % 2 == 1) { feasible = false; break; }
        EMat m = rng.symmetric_matrix(spec.mu[r], par);
        if (j == 0)
          while (det_exact(m).is_zero()) m = rng.symmetric_matrix(spec.mu[r], par);
        coeff[r].push_back(m);
      }
    }
    if (!feasible) continue;
    AltToeplitzData data{spec, coeff, 1};
    data.validate();
    EMat big = alt_assemble(data);
    EMat f = f_block(spec);
    CHECK(f * transpose(big) * f == big);
    ++checked;
  }
}

TEST_CASE("block-diagonal unipotent generators") {
  SegmentSpec spec = seg({3}, {2});
  std::vector<EMat> b{EMat::identity(2)};
  EMat z1 = Rng(41).symmetric_matrix(2, 1);
  EMat z2 = Rng(43).symmetric_matrix(2, -1);

  // all Z = 0 gives the identity
  std::vector<std::vector<EMat>> zzero{{EMat(2, 2), EMat(2, 2)}};
  CHECK(assemble(generator_w(spec, b, zzero)) == EMat::identity(6));

  // one unrolled step: W_1 = Z_1, W_2 = Z_2 + Z_1^T Z_1 / 2
  ToeplitzElement w = generator_w(spec, b, {{z1, z2}});
  CHECK(w.coeff(0, 0, 1) == z1);
  CHECK(w.coeff(0, 0, 2) == z2 + transpose(z1) * z1 * rat(1, 2));

  CHECK_THROWS_AS(generator_w(spec, b, {{z2, z1}}), Error);  // wrong parity
}

TEST_CASE("generator families solve the block-diagonal congruence") {
  Rng rng(47);
  // two segments: odd alpha with symmetric B, even alpha with skew B
  SegmentSpec spec = seg({3, 2}, {1, 2});
  std::vector<EMat> b(2);
  b[0] = EMat{{ExactScalar(-1)}};
  do { b[1] = rng.symmetric_matrix(2, -1); } while (det_exact(b[1]).is_zero());

  CongruenceProblem problem = [&] {
    std::vector<std::vector<EMat>> coeff(2);
    coeff[0] = {b[0], EMat(1, 1), EMat(1, 1)};
    coeff[1] = {b[1], EMat(2, 2)};
    AltToeplitzData data = make_alt_data(spec, coeff);
    return CongruenceProblem{spec, data, data};
  }();

  for (int t = 0; t < 20; ++t) {
    std::vector<std::vector<EMat>> z(2);
    for (int r = 0; r < 2; ++r)
      for (int j = 1; j < spec.alpha[r]; ++j)
        z[r].push_back(rng.symmetric_matrix(spec.mu[r], zee_parity(spec, 1, r, j)));
    ToeplitzElement w = generator_w(spec, b, z);
    CHECK(congruence_residual(problem, w).is_zero());
  }

  for (int t = 0; t < 10; ++t) {
    EMat f = rng.matrix(spec.mu[1], spec.mu[0]);
    for (int k = 0; k < 2; ++k) {
      ToeplitzElement h = generator_h(spec, 0, 1, k, f, b, GeneratorMode::Certified);
      CHECK(congruence_residual(problem, h).is_zero());
    }
  }
}

TEST_CASE("sparse cross generator reproduces the four-two display") {
  // alpha = (4, 2), k = 1, B_1 = B_2 = I, scalar F
  SegmentSpec spec = seg({4, 2}, {1, 1});
  std::vector<EMat> b{EMat::identity(1), EMat::identity(1)};
  ExactScalar fval = rat(5, 3);
  EMat f{{fval}};
  ToeplitzElement h = generator_h(spec, 0, 1, 1, f, b, GeneratorMode::ClosedForm);

  EMat expected = EMat::identity(6);
  expected(0, 3) = -(fval * fval) * rat(1, 2);  // -F^T F / 2
  expected(0, 5) = -fval;                       // -F^T at the first superdiagonal
  expected(4, 3) = fval;                        // F
  CHECK(assemble(h) == expected);

  // identity at F = 0
  CHECK(assemble(generator_h(spec, 0, 1, 1, EMat(1, 1), b, GeneratorMode::ClosedForm)) ==
        EMat::identity(6));

  // the same display with a 2x1 parameter block
  SegmentSpec spec2 = seg({4, 2}, {1, 2});
  std::vector<EMat> b2{EMat::identity(1), EMat::identity(2)};
  Rng rng(53);
  EMat f2 = rng.matrix(2, 1);
  ToeplitzElement h2 = generator_h(spec2, 0, 1, 1, f2, b2, GeneratorMode::ClosedForm);
  CHECK(h2.coeff(1, 0, 1) == f2);
  CHECK(h2.coeff(0, 1, 1) == -transpose(f2));
  CHECK(h2.coeff(0, 0, 3) == -(transpose(f2) * f2) * rat(1, 2));
  CHECK(h2.coeff(0, 0, 1).is_zero());
  CHECK(h2.coeff(0, 0, 2).is_zero());
  CHECK(h2.coeff(1, 1, 1).is_zero());

  // the display solves the congruence whose alternation starts at -I on the
  // shorter segment
  EMat big = assemble(h2);
  std::vector<EMat> parts;
  for (int j = 0; j < 4; ++j) parts.push_back(EMat::identity(1) * ExactScalar(j % 2 == 0 ? 1 : -1));
  for (int j = 0; j < 2; ++j) parts.push_back(EMat::identity(2) * ExactScalar(j % 2 == 0 ? -1 : 1));
  EMat bb = direct_sum(parts);
  EMat ff = f_block(spec2);
  CHECK(ff * transpose(big) * ff * bb * big == bb);

  CHECK_THROWS_AS(generator_h(spec, 1, 0, 0, f, b), Error);
  CHECK_THROWS_AS(generator_h(spec, 0, 1, 2, f, b), Error);
}

TEST_CASE("series coefficients of the cross generator") {
  // a_1 = -C(2,1)/16 = -1/8 shows up in the second correction term:
  // stride 1 at k = 0, alpha = (3, 1), so V at j = 1 uses a_0, j = 2 uses a_1
  SegmentSpec spec = seg({3, 1}, {1, 1});
  std::vector<EMat> b{EMat::identity(1), EMat::identity(1)};
  ExactScalar fval = rat(1);
  ToeplitzElement h = generator_h(spec, 0, 1, 0, EMat{{fval}}, b, GeneratorMode::ClosedForm);
  CHECK(h.coeff(0, 0, 1) == EMat{{rat(-1, 2)}});
  CHECK(h.coeff(0, 0, 2) == EMat{{rat(-1, 8)}});
}
