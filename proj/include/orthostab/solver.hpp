#pragma once

#include <map>
#include <string>
#include <vector>

#include "orthostab/toeplitz.hpp"

namespace orthostab {

// Data of the congruence equation C = F X^T F B X over the block-Toeplitz
// pattern. B and C must share the parity mode sigma.
struct CongruenceProblem {
  SegmentSpec spec;
  AltToeplitzData b, c;

  void validate() const;
  int sigma() const { return b.sigma; }
};

// Free parameters of the solution:
//   below[{r,s}] (r > s)  — arbitrary coefficient blocks of the lower pattern,
//   seeds[r]              — A_0^{rr} with C_0^r = (A_0^{rr})^T B_0^r A_0^{rr},
//   zees[r][j-1]          — parity-constrained free blocks, j = 1..alpha_r-1.
struct FreeData {
  std::map<std::pair<int, int>, std::vector<EMat>> below;
  std::vector<EMat> seeds;
  std::vector<std::vector<EMat>> zees;
};

// Required transpose sign of Z_j^r: Z^T = zee_parity * Z.
int zee_parity(const SegmentSpec& spec, int sigma, int r, int j);

enum class EvalOrder {
  Standard,          // diagonal coefficients of step j before the off-diagonal sweep
  OffDiagonalFirst,  // deliberately wrong; exists to show the order matters
};

// The congruence solver: fills in the uniquely determined coefficients from
// the free data, in the fixed evaluation order (j ascending; within each j the
// diagonals, then the off-diagonal bands p = 1..N-1).
ToeplitzElement congruence_solve(const CongruenceProblem& p, const FreeData& f,
                                 EvalOrder order = EvalOrder::Standard);

// Residual C - F X^T F B X of a candidate solution.
EMat congruence_residual(const CongruenceProblem& p, const ToeplitzElement& x);

// Solves A^T X + (-1)^j X^T A = B as X = (A^T)^-1 (Z + B/2); B symmetric for
// j even / skew for j odd, Z the opposite.
EMat skew_step_solve(const EMat& a, const EMat& b, int j, const EMat& z);

// Closed-form dimension of the solution space (free-parameter count).
long solution_dim(const SegmentSpec& spec);

struct FreeSlot {
  std::string kind;  // "below", "seed", "zee"
  int r, s, j;       // unused coordinates set to -1
  long dim;
};

// Free-parameter slots for a parity-valid B; slot dimensions sum to
// solution_dim(spec) in the standard parity mode.
std::vector<FreeSlot> free_shape(const SegmentSpec& spec, const AltToeplitzData& b);

// Congruence data of the nilpotent isotropy computation: multiplicities
// doubled on even segments, B_r = sum of [[0,-1],[1,0]] blocks (even alpha_r)
// or (-1)^{(alpha_r-1)/2} I (odd alpha_r), C = B.
EMat nilpotent_b_seed(int alpha_r, int m_r);
CongruenceProblem nilpotent_stabilizer_problem(const SegmentSpec& spec);

}  // namespace orthostab
