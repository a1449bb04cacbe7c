#pragma once

#include <cstdint>
#include <optional>

#include "kitebeam/circle.hpp"
#include "kitebeam/diophantine.hpp"
#include "kitebeam/errors.hpp"

namespace kitebeam {

// Closed-form bound constants. The counts themselves overflow any fixed
// width integer almost immediately (the eps = 0.1, p = q = 1 case is
// already ~10^13.4), so everything is carried as log10 values. The
// kernels are templated on the scalar so the extended-precision
// instantiation can serve as an oracle for the double path.

// log10 of L(p, q, eps) = 4*pi*(p+q) * 100^{2(p+q)} / eps^{2(p+q)},
// taking eps in log10 form so that astronomically small eps stay
// representable.
template <typename Scalar>
Scalar log10_commensurate_length(int p, int q, Scalar log10_eps) {
  if (p < 1 || q < 1) throw std::domain_error("bound formula: p, q must be >= 1");
  const Scalar s = static_cast<Scalar>(p + q);
  return std::log10(Scalar(4) * std::numbers::pi_v<Scalar> * s) +
         Scalar(2) * s * (Scalar(2) - log10_eps);
}

// Public form with eps in (0, 1).
double log10_L_bound(int p, int q, double eps);

struct BoundReport {
  int p = 0;
  int q = 0;
  double eps = 0.0;
  double log10_L = 0.0;
  double log10_R = 0.0;
  double log10_M = 0.0;              // always log10_R + log10_L, exactly
  std::int64_t n_index = 0;          // floor(1/eps) + 1
};

// Log-space L, R = (100/eps)^L and M = R*L for a given pair. Throws
// BudgetError when even the logarithms leave the representable range.
struct LogBounds {
  double log10_L = 0.0;
  double log10_R = 0.0;
  double log10_M = 0.0;
};

LogBounds log_bounds_from_log10_eps(int p, int q, double log10_eps);

BoundReport m_of_eps(int p, int q, double eps);

// Approximation inequality check:
//   |alpha/beta - p/q|  <  N_{beta/q}(L(p,q,1/n)) / (100 beta (100 n)^L)
// evaluated in log10 space with angles in turns. The inner Diophantine
// scan is feasible only for tiny L, so the verdict is indeterminate
// whenever the scan would blow the budget (or L itself is not
// representable). A forced small L_override is provided as a testing
// hook so the arithmetic path can be exercised end to end.
enum class ApproximationStatus { holds, fails, indeterminate };

struct ApproximationOptions {
  std::optional<double> L_override;
  ScanBudget budget{};
};

struct ApproximationReport {
  ApproximationStatus status = ApproximationStatus::indeterminate;
  double log10_lhs = 0.0;   // -inf when alpha/beta == p/q exactly
  double log10_rhs = 0.0;   // NaN when indeterminate
  double L_used = 0.0;
  bool n_scan_overflow = false;
  double n_value = 0.0;     // N_{beta/q}(floor(L)) when computed
};

ApproximationReport approximation_inequality_check(CircleAngle alpha, CircleAngle beta, int p,
                                         int q, int n, ApproximationOptions options = {});

}  // namespace kitebeam
