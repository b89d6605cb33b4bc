#include <doctest.h>

#include "orthostab/oracle.hpp"
#include "support.hpp"

using namespace orthostab;
using namespace orthostab::testing;

TEST_CASE("skew commutant dimensions of pinned matrices") {
  CHECK(commutant_so_dim(EMat(4, 4)) == 6);  // so_4
  CHECK(commutant_so_dim(EMat(5, 5)) == 10);
  CHECK(commutant_so_dim(k_block(1, rat(1))) == 1);
  // 6x6 two-segment pair form: brute force equals the group dimension 5
  EMat m = assemble_canonical(nonzero_spec({2, 1}, {1, 1}, rat(1)));
  CHECK(commutant_so_dim(m) == 5);
  // odd nilpotent pair: dimension 2
  CHECK(commutant_so_dim(assemble_canonical(nilpotent_spec({3, 1}, {1, 1}))) == 2);
}

TEST_CASE("commutant dimension formula vs brute force") {
  CHECK(commutant_dim_formula(seg({2}, {2})) == 8);
  CHECK(commutant_dim_formula(seg({1}, {1})) == 1);
  CHECK(commutant_dim_formula(seg({2, 1}, {1, 1})) == 5);
  for (const SegmentSpec& spec : enumerate_specs(6, SpecWeight::Plain)) {
    for (ExactScalar lambda : {ExactScalar(), ExactScalar(1)}) {
      CHECK(commutant_dim_formula(spec) ==
            sylvester_nullspace_dim(single_eigenvalue_jordan(spec, lambda)));
    }
  }
}

TEST_CASE("exponential commutants coincide") {
  CHECK(exp_commutant_check(seg({1}, {3}), ExactScalar(), ExactScalar(1)));
  CHECK(exp_commutant_check(seg({2}, {1}), ExactScalar(), ExactScalar(1)));
  CHECK(exp_commutant_check(seg({3, 1}, {1, 1}), ExactScalar(), ExactScalar(1)));
  // a field-valued exponential at nonzero eigenvalue: e^lambda = i
  CHECK(exp_commutant_check(seg({3, 1}, {1, 1}), ExactScalar(1), ExactScalar::i()));
  CHECK(exp_commutant_check(seg({2, 1}, {2, 1}), ExactScalar(1), ExactScalar::i()));
}

TEST_CASE("spec enumeration respects the weights") {
  for (const SegmentSpec& spec : enumerate_specs(8, SpecWeight::Pair)) {
    int size = 0;
    for (int r = 0; r < spec.count(); ++r) size += 2 * spec.alpha[r] * spec.mu[r];
    CHECK(size <= 8);
  }
  for (const SegmentSpec& spec : enumerate_specs(8, SpecWeight::Nilpotent)) {
    int size = 0;
    for (int r = 0; r < spec.count(); ++r) size += spec.alpha[r] * spec.m_tilde(r);
    CHECK(size <= 8);
  }
  // the enumeration must hit some known members
  bool found = false;
  for (const SegmentSpec& spec : enumerate_specs(8, SpecWeight::Nilpotent))
    if (spec.alpha == std::vector<int>{3, 1} && spec.mu == std::vector<int>{1, 1}) found = true;
  CHECK(found);
}

TEST_CASE("dimension sweep agrees on a small family") {
  for (const SweepRow& row : dimension_sweep(5)) {
    CHECK(row.match);
    CHECK(row.formula == row.oracle);
  }
}
