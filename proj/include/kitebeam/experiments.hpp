#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kitebeam/beam.hpp"
#include "kitebeam/bounds.hpp"

namespace kitebeam {

// One beam run of the splitting experiment.
struct ExperimentRow {
  int index = 0;
  double eps = 0.0;
  double direction_turns = 0.0;
  std::string outcome;      // "split" | "periodic" | "undecided"
  double T = 0.0;
  double period = 0.0;      // 0 unless periodic
  std::size_t kite_count = 0;
  double c_used = 0.0;
};

struct SplittingConfig {
  std::vector<double> eps_list;
  int directions = 0;
  std::uint64_t seed = 1;
  double max_T = 1e4;
  int base_side = -1;  // -1: longest side
};

// Seeded sweep over (eps, direction) pairs. Directions are uniform over
// the inward half-circle at the base-side midpoint; draws whose base
// would graze the side or not fit it are rejected and redrawn, so every
// row is a well-formed beam. Rows come back in (eps, direction) order
// regardless of any internal scheduling. When details is given, the full
// base and outcome of every run are recorded alongside the rows.
struct BeamRun {
  BeamBase base;
  Vec2 origin = Vec2::Zero();
  PropagationOutcome outcome;
};

std::vector<ExperimentRow> splitting_experiment(const Kite& kite,
                                                const SplittingConfig& config,
                                                std::vector<BeamRun>* details = nullptr);

// Net-function model handle: log10 of a bound on the net function,
// evaluated at an eps given in log10 form (the inner eps of the
// splitting-time bound is far below the smallest positive double).
using NetFunctionHandle = std::function<double(double log10_eps)>;

NetFunctionHandle constant_net_function(double log10_value);
NetFunctionHandle bound_net_function(int p, int q);

// Splitting-time bound: with n16 = floor(16/eps) + 1,
//   eps_inner = (eps/1600)^n16,  P = F(eps_inner),  Q = n16 * P,
//   bound = Q + C / (eps * N_ab(Q)).
// N_ab(Q) is scanned only when Q fits the budget; otherwise the additive
// term stays symbolic and log10_bound is NaN.
struct SplittingBoundReport {
  double eps = 0.0;
  std::int64_t n16 = 0;
  double log10_eps_inner = 0.0;
  double log10_P = 0.0;
  double log10_Q = 0.0;
  bool n_scan_ok = false;
  double n_at_Q = 0.0;       // N_ab(Q) when scanned
  double log10_bound = 0.0;  // NaN when the N-term is symbolic
  double c_used = 0.0;
};

SplittingBoundReport splitting_time_bound(CircleAngle alpha, CircleAngle beta, double eps,
                              const NetFunctionHandle& F, double C,
                              ScanBudget budget = {});

}  // namespace kitebeam
