#include "kitebeam/experiments.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "kitebeam/rng.hpp"

namespace kitebeam {

namespace {

const char* outcome_name(PropagationOutcome::Kind kind) {
  switch (kind) {
    case PropagationOutcome::Kind::split: return "split";
    case PropagationOutcome::Kind::periodic: return "periodic";
    case PropagationOutcome::Kind::undecided: return "undecided";
  }
  return "undecided";
}

int longest_side(const Kite& kite) {
  int best = 0;
  for (int j = 1; j < 4; ++j) {
    if (kite.side_length(j) > kite.side_length(best)) best = j;
  }
  return best;
}

}  // namespace

std::vector<ExperimentRow> splitting_experiment(const Kite& kite,
                                                const SplittingConfig& config,
                                                std::vector<BeamRun>* details) {
  if (config.eps_list.empty()) {
    throw std::domain_error("splitting_experiment: eps list must not be empty");
  }
  if (config.directions < 0) {
    throw std::domain_error("splitting_experiment: direction count must be >= 0");
  }
  const int side = config.base_side >= 0 ? config.base_side : longest_side(kite);
  const double c_used = estimate_C(kite, 256, 1);

  std::vector<ExperimentRow> rows;
  rows.reserve(config.eps_list.size() * static_cast<std::size_t>(config.directions));
  int row_index = 0;
  for (std::size_t ei = 0; ei < config.eps_list.size(); ++ei) {
    const double eps = config.eps_list[ei];
    for (int di = 0; di < config.directions; ++di) {
      SplitMix64 rng(derive_seed(config.seed, (ei << 32) ^ static_cast<std::uint64_t>(di)));
      BeamBase base;
      bool ok = false;
      for (int attempt = 0; attempt < 1000 && !ok; ++attempt) {
        const double dir = rng.uniform01();
        try {
          base = make_beam_base(kite, side, 0.5, CircleAngle::from_turns(dir), eps);
          ok = true;
        } catch (const std::domain_error&) {
        }
      }
      if (!ok) {
        throw std::domain_error("splitting_experiment: no admissible direction found");
      }

      Beam beam;
      const PropagationOutcome outcome = propagate_beam(kite, base, config.max_T, &beam);
      if (details) details->push_back({base, beam.origin, outcome});
      ExperimentRow row;
      row.index = row_index++;
      row.eps = eps;
      row.direction_turns = base.direction.turns();
      row.outcome = outcome_name(outcome.kind);
      row.T = outcome.T;
      row.period = outcome.orbit ? outcome.orbit->period : 0.0;
      row.kite_count = outcome.kite_count;
      row.c_used = c_used;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

NetFunctionHandle constant_net_function(double log10_value) {
  return [log10_value](double) { return log10_value; };
}

NetFunctionHandle bound_net_function(int p, int q) {
  return [p, q](double log10_eps) {
    return log_bounds_from_log10_eps(p, q, log10_eps).log10_M;
  };
}

SplittingBoundReport splitting_time_bound(CircleAngle alpha, CircleAngle beta, double eps,
                              const NetFunctionHandle& F, double C, ScanBudget budget) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::domain_error("splitting_time_bound: eps must lie in (0, 1)");
  }
  if (!F) throw std::domain_error("splitting_time_bound: empty net-function handle");

  SplittingBoundReport report;
  report.eps = eps;
  report.c_used = C;
  report.n16 = static_cast<std::int64_t>(std::floor(16.0 / eps)) + 1;
  report.log10_eps_inner =
      static_cast<double>(report.n16) * (std::log10(eps) - std::log10(1600.0));

  try {
    report.log10_P = F(report.log10_eps_inner);
  } catch (const std::exception& e) {
    throw BudgetError(std::string("splitting_time_bound: net-function handle failed: ") +
                      e.what());
  }
  report.log10_Q = std::log10(static_cast<double>(report.n16)) + report.log10_P;
  if (!std::isfinite(report.log10_Q)) {
    throw BudgetError("splitting_time_bound: Q is not representable in log space");
  }

  report.log10_bound = std::numeric_limits<double>::quiet_NaN();
  report.n_scan_ok = false;
  if (report.log10_Q <= 15.0) {
    const double q_value = std::pow(10.0, report.log10_Q);
    const std::int64_t k = static_cast<std::int64_t>(std::llround(q_value));
    if (k >= 1) {
      const DiophantineValue nv = n_pair(alpha, beta, k, budget);
      if (!nv.budget_exceeded && nv.value > 0.0) {
        report.n_scan_ok = true;
        report.n_at_Q = nv.value;
        const double bound = q_value + C / (eps * nv.value);
        report.log10_bound = std::log10(bound);
      }
    }
  }
  return report;
}

}  // namespace kitebeam
