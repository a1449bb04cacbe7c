#include "kitebeam/bounds.hpp"

#include <cmath>
#include <limits>

namespace kitebeam {

double log10_L_bound(int p, int q, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::domain_error("log10_L_bound: eps must lie in (0, 1)");
  }
  return log10_commensurate_length<double>(p, q, std::log10(eps));
}

LogBounds log_bounds_from_log10_eps(int p, int q, double log10_eps) {
  LogBounds out;
  out.log10_L = log10_commensurate_length<double>(p, q, log10_eps);
  const double L_value = std::pow(10.0, out.log10_L);
  out.log10_R = L_value * (2.0 - log10_eps);  // log10 (100/eps)^L
  out.log10_M = out.log10_R + out.log10_L;
  if (!std::isfinite(out.log10_L) || !std::isfinite(out.log10_R) ||
      !std::isfinite(out.log10_M)) {
    throw BudgetError("bound magnitude exceeds the representable log range");
  }
  return out;
}

BoundReport m_of_eps(int p, int q, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::domain_error("m_of_eps: eps must lie in (0, 1)");
  }
  const LogBounds lb = log_bounds_from_log10_eps(p, q, std::log10(eps));
  BoundReport report;
  report.p = p;
  report.q = q;
  report.eps = eps;
  report.log10_L = lb.log10_L;
  report.log10_R = lb.log10_R;
  report.log10_M = lb.log10_M;
  report.n_index = static_cast<std::int64_t>(std::floor(1.0 / eps)) + 1;
  return report;
}

ApproximationReport approximation_inequality_check(CircleAngle alpha, CircleAngle beta, int p,
                                         int q, int n, ApproximationOptions options) {
  if (p < 1 || q < 1 || n < 1) {
    throw std::domain_error("approximation_inequality_check: p, q, n must be >= 1");
  }
  if (beta.turns() == 0.0) {
    throw std::domain_error("approximation_inequality_check: beta must be nonzero");
  }

  ApproximationReport report;

  // eps = 1/n; at n = 1 the formula is evaluated at its eps -> 1 limit.
  const double log10_eps = -std::log10(static_cast<double>(n));
  double L_value;
  if (options.L_override) {
    L_value = *options.L_override;
    if (!(L_value >= 1.0)) {
      throw std::domain_error("approximation_inequality_check: L override must be >= 1");
    }
  } else {
    L_value = std::pow(10.0, log10_commensurate_length<double>(p, q, log10_eps));
  }
  report.L_used = L_value;

  const double ratio = alpha.turns() / beta.turns();
  const double lhs = std::abs(ratio - static_cast<double>(p) / static_cast<double>(q));
  report.log10_lhs = lhs == 0.0 ? -std::numeric_limits<double>::infinity()
                                : std::log10(lhs);

  if (!std::isfinite(L_value) ||
      L_value > static_cast<double>(std::numeric_limits<std::int64_t>::max() / 4)) {
    report.status = ApproximationStatus::indeterminate;
    report.n_scan_overflow = true;
    report.log10_rhs = std::numeric_limits<double>::quiet_NaN();
    return report;
  }

  const std::int64_t k_scan = static_cast<std::int64_t>(std::floor(L_value));
  const CircleAngle generator = CircleAngle::from_turns(beta.turns() / q);
  const DiophantineValue nv = n_single(generator, std::max<std::int64_t>(k_scan, 1),
                                       options.budget);
  if (nv.budget_exceeded) {
    report.status = ApproximationStatus::indeterminate;
    report.n_scan_overflow = true;
    report.log10_rhs = std::numeric_limits<double>::quiet_NaN();
    return report;
  }
  report.n_value = nv.value;

  // rhs = N / (100 beta (100 n)^L), all in turns.
  report.log10_rhs = std::log10(nv.value) - std::log10(100.0 * beta.turns()) -
                     L_value * std::log10(100.0 * static_cast<double>(n));
  report.status = report.log10_lhs < report.log10_rhs ? ApproximationStatus::holds
                                                      : ApproximationStatus::fails;
  return report;
}

}  // namespace kitebeam
