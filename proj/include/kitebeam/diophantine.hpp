#pragma once

#include <cstdint>
#include <vector>

#include "kitebeam/circle.hpp"

namespace kitebeam {

// Cap on the number of scan candidates a single Diophantine query may
// evaluate. The inner minima of the bound formulas ask for scans that no
// machine can finish; those must fail loudly instead of hanging.
struct ScanBudget {
  std::uint64_t max_candidates = 1'000'000'000ULL;
};

struct DiophantineValue {
  double value = 0.0;          // valid only when !budget_exceeded
  bool budget_exceeded = false;
};

// min <n*alpha> over 1 <= |n| <= k. n = 0 is excluded: with it the
// minimum is identically zero and useless as a gap bound.
DiophantineValue n_single(CircleAngle alpha, std::int64_t k, ScanBudget budget = {});

// min <n*alpha + m*beta> over 1 <= |n| + |m| <= k, pair (0, 0) excluded.
//
// Candidates are evaluated as fl(fl(n*a) + fl(m*b)); any reimplementation
// that evaluates the same expression over the same index set produces a
// bit-identical minimum.
DiophantineValue n_pair(CircleAngle alpha, CircleAngle beta, std::int64_t k,
                        ScanBudget budget = {});

// All of N_pair(alpha, beta, k) for k = 1..k_max in a single sweep over the
// diamond |n| + |m| <= k_max. Bit-identical to per-k scans. When the full
// sweep exceeds the budget, values for the largest feasible k_computed are
// still returned with budget_exceeded set.
struct ProfileResult {
  std::vector<double> values;  // values[k-1] = N_pair(alpha, beta, k)
  std::int64_t k_computed = 0;
  bool budget_exceeded = false;
};

ProfileResult n_pair_profile(CircleAngle alpha, CircleAngle beta, std::int64_t k_max,
                             ScanBudget budget = {});
ProfileResult n_single_profile(CircleAngle alpha, std::int64_t k_max,
                               ScanBudget budget = {});

// Continued-fraction convergents p/q of x > 0, in lowest terms, with the
// classical best-approximation property |x - p/q| < 1/q^2. Terminates
// early when x is (numerically) rational or q would overflow.
struct Convergent {
  std::int64_t p = 0;
  std::int64_t q = 1;
};

std::vector<Convergent> convergents(double x, int depth);

}  // namespace kitebeam
