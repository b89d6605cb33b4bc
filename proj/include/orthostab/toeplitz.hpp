#pragma once

#include <utility>
#include <vector>

#include "orthostab/canonical.hpp"
#include "orthostab/rng.hpp"

namespace orthostab {

// Element of the block-Toeplitz group: block (r,s) is a rectangular upper
// triangular Toeplitz matrix alpha_r x alpha_s in m_r x m_s parameter blocks
// A_0^{rs}..A_{b_rs-1}^{rs}, b_rs = min(alpha_r, alpha_s).
struct ToeplitzElement {
  SegmentSpec spec;
  std::vector<std::vector<std::vector<EMat>>> blocks;  // [r][s][j]

  const EMat& coeff(int r, int s, int j) const { return blocks[r][s][j]; }
  EMat& coeff(int r, int s, int j) { return blocks[r][s][j]; }
};

inline int b_min(const SegmentSpec& spec, int r, int s) {
  return std::min(spec.alpha[r], spec.alpha[s]);
}
int toeplitz_size(const SegmentSpec& spec);  // sum alpha_r * m_r

ToeplitzElement identity_element(const SegmentSpec& spec);
ToeplitzElement zero_patterned(const SegmentSpec& spec);  // all coefficient blocks zero

EMat assemble(const ToeplitzElement& e);

// Pattern membership: returns true when m matches the padded-Toeplitz pattern;
// on failure reports the first offending entry position.
bool matches_pattern(const SegmentSpec& spec, const EMat& m, std::pair<int, int>* where = nullptr);

// Inverse of assemble; NotInGroup when the pattern or the nonsingularity of the
// diagonal seeds fails.
ToeplitzElement extract(const SegmentSpec& spec, const EMat& m);

ToeplitzElement group_product(const ToeplitzElement& x, const ToeplitzElement& y);
ToeplitzElement group_inverse(const ToeplitzElement& x);

// x = D * U with D carrying only the diagonal seeds A_0^{rr} and U unipotent
// (unitriangular Toeplitz diagonal blocks).
std::pair<ToeplitzElement, ToeplitzElement> semidirect_factor(const ToeplitzElement& x);

ToeplitzElement random_element(const SegmentSpec& spec, Rng& rng);

// --- the Omega reshuffle -----------------------------------------------------

EMat segment_omega(const SegmentSpec& spec, const std::vector<int>& mult);  // direct sum of Omega_{alpha_r, mult_r}

// Conjugation Omega^T X Omega mapping grid-of-rectangular-Toeplitz matrices
// (the Sylvester solution shape) onto the block-Toeplitz pattern, and back.
EMat reshuffle(const SegmentSpec& spec, const EMat& x_structured);
EMat unshuffle(const SegmentSpec& spec, const EMat& x_patterned);

// --- alternating Toeplitz data ------------------------------------------------

// Per segment r the coefficients B_0^r..B_{alpha_r-1}^r of an alternating
// upper triangular Toeplitz block. sigma records the global parity mode:
//   +1: B_j^r symmetric iff alpha_r - j odd (skew otherwise),
//   -1: the uniformly flipped convention.
// Both satisfy F (T_a)^T F = sigma * T_a, which is what the solver needs.
struct AltToeplitzData {
  SegmentSpec spec;
  std::vector<std::vector<EMat>> coeff;  // [r][j]
  int sigma = 1;

  void validate() const;
};

int parity_sign(const AltToeplitzData& d, int r, int j);  // required transpose sign of B_j^r

// Detect the parity mode of raw coefficients; ParityError when inconsistent.
AltToeplitzData make_alt_data(const SegmentSpec& spec, std::vector<std::vector<EMat>> coeff);

EMat alt_assemble(const AltToeplitzData& d);
EMat alt_toeplitz(const std::vector<EMat>& coeff);  // single T_a block
EMat f_block(const SegmentSpec& spec);              // direct sum of E_{alpha_r}(I_{m_r})

// --- generator families --------------------------------------------------------

// Block-diagonal unipotent generators T(I, W_1^r, ...) built from free
// parity-constrained Z data; every output solves F W^T F B W = B for the
// block-diagonal alternating B with coefficients (B_r, 0, ..., 0).
ToeplitzElement generator_w(const SegmentSpec& spec, const std::vector<EMat>& b,
                            const std::vector<std::vector<EMat>>& z);

enum class GeneratorMode {
  Certified,   // diagonal corrections computed by the congruence solver
  ClosedForm,  // diagnostic closed form (reproduces the sparse display)
};

// Cross-segment generator: F sits on the k-th superdiagonal of block (t,p),
// -B_p^{-1} F^T B_t on the k-th superdiagonal of block (p,t), identity
// diagonals with correction blocks. p, t are 0-based with p < t.
ToeplitzElement generator_h(const SegmentSpec& spec, int p, int t, int k, const EMat& f,
                            const std::vector<EMat>& b,
                            GeneratorMode mode = GeneratorMode::Certified);

}  // namespace orthostab
