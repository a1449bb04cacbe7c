#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kitebeam/diophantine.hpp"
#include "kitebeam/nets.hpp"
#include "kitebeam/sequence.hpp"

namespace kitebeam {

// Smallest multiple n0 = m * block, m >= 2, with <n0 * gamma> < delta.
// Pigeonhole guarantees n0 <= block * ceil(1/delta) for irrational gamma;
// exceeding that bound is reported as a domain error. The scan itself is
// capped by max_multiples.
std::int64_t find_pigeonhole_multiple(CircleAngle gamma, int block, double delta,
                                      std::uint64_t max_multiples);

struct CommensurateResult {
  IntervalNetWitness witness;  // indices into the input sequence's points
  int color_offset = 0;        // residue shift t in [0, p+q-1]
  std::int64_t n0 = 0;
  double delta = 0.0;
  std::int64_t k_intervals = 0;  // floor(1/delta)
  bool mirrored = false;         // construction ran on the negative shadow side
};

// Replays the commensurate-pair net construction for alpha = p*gamma,
// beta = q*gamma: maps the walk to its integer shadow, finds the
// pigeonhole multiple n0 with <n0*gamma> < delta = (eps/100)^{p+q},
// builds the arithmetic-progression delta-net k*n0*gamma (k = 1..K,
// K = floor(1/delta)), colors position k by the residue offset of the
// first walk point found in [k*n0, k*n0 + p+q-1], extracts a
// monochromatic eps-subnet, and shifts it back onto actual walk points.
//
// Throws InsufficientLengthError (with the first uncovered k) when the
// walk's shadow does not reach K*n0 on either side, and BudgetError when
// 1/delta exceeds the scan budget.
CommensurateResult commensurate_net_construction(int p, int q, CircleAngle gamma,
                                                 const ConnectedSequence& seq, double eps,
                                                 ScanBudget budget = {});

// First prefix of the walk containing a relative eps-net over a
// non-degenerate arc. The qualifying subset for an arc is every prefix
// point inside it; the arc must span at least min_width (turns). Among
// qualifying subsets at the hitting prefix the widest hull wins, ties
// broken by the smaller arc start. Arcs are contiguous runs of the
// cyclically sorted prefix; a run never spans its own largest gap.
struct PrefixNetResult {
  std::size_t index = 0;  // number of points in the hitting prefix
  IntervalNetWitness witness;
};

std::optional<PrefixNetResult> first_net_prefix(const ConnectedSequence& seq, double eps,
                                                double min_width);

// Monte Carlo lower-bound probe of the net function: samples random
// uniform-step walks (started at 0), measures the first-net prefix
// length of each, and reports the maximum together with the full
// histogram. Walks that never develop a net within max_len land in the
// censored bucket. Per-sample seeds derive from (master_seed, index), so
// the result is identical for any task partitioning.
struct NetFunctionEstimate {
  std::int64_t empirical_F_lower = 0;  // 0 when no walk produced a net
  std::vector<std::pair<std::int64_t, std::int64_t>> histogram;  // (len, count)
  std::int64_t censored = 0;
  std::int64_t samples = 0;
};

NetFunctionEstimate estimate_net_function(CircleAngle alpha, CircleAngle beta, double eps,
                                          double min_width, int samples, int max_len,
                                          std::uint64_t master_seed, int n_tasks = 0);

}  // namespace kitebeam
