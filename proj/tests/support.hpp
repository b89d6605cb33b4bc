#pragma once

#include "orthostab/isotropy.hpp"

namespace orthostab::testing {

inline ExactScalar rat(long p, long q = 1) { return ExactScalar::rational(p, q); }
inline ExactScalar ei() { return ExactScalar::i(); }

inline SegmentSpec seg(std::vector<int> alpha, std::vector<int> mu) {
  SegmentSpec s{std::move(alpha), std::move(mu)};
  s.validate();
  return s;
}

inline CanonicalSpec nonzero_spec(std::vector<int> alpha, std::vector<int> mu,
                                  ExactScalar lambda = ExactScalar(1)) {
  CanonicalSpec s;
  s.kind = CanonicalCase::NonzeroPair;
  s.segments = seg(std::move(alpha), std::move(mu));
  s.lambda = lambda;
  return s;
}

inline CanonicalSpec nilpotent_spec(std::vector<int> alpha, std::vector<int> mu) {
  CanonicalSpec s;
  s.kind = CanonicalCase::Nilpotent;
  s.segments = seg(std::move(alpha), std::move(mu));
  return s;
}

inline CanonicalSpec unipotent_spec(std::vector<int> alpha, std::vector<int> mu, int eps) {
  CanonicalSpec s;
  s.kind = CanonicalCase::UnipotentSigned;
  s.segments = seg(std::move(alpha), std::move(mu));
  s.epsilon = eps;
  return s;
}

// Ranks of successive powers pin the nilpotent Jordan structure.
inline std::vector<int> power_ranks(const EMat& m) {
  std::vector<int> ranks;
  EMat p = m;
  while (true) {
    int r = rank_exact(p);
    ranks.push_back(r);
    if (r == 0) break;
    p = p * m;
  }
  return ranks;
}

}  // namespace orthostab::testing
