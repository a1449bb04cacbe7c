#include "kitebeam/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace kitebeam {

namespace {

// Number of (n, m) != (0, 0) with |n| + |m| <= k.
std::uint64_t pair_candidates(std::int64_t k) {
  const std::uint64_t ku = static_cast<std::uint64_t>(k);
  return 2 * ku * (ku + 1);
}

void check_k(std::int64_t k) {
  if (k < 1) throw std::domain_error("Diophantine minimum: k must be >= 1");
}

}  // namespace

DiophantineValue n_single(CircleAngle alpha, std::int64_t k, ScanBudget budget) {
  check_k(k);
  if (2 * static_cast<std::uint64_t>(k) > budget.max_candidates) {
    return {0.0, true};
  }
  const double a = alpha.turns();
  double best = std::numeric_limits<double>::infinity();
  for (std::int64_t n = 1; n <= k; ++n) {
    best = std::min(best, nearest_integer_distance(static_cast<double>(n) * a));
    best = std::min(best, nearest_integer_distance(static_cast<double>(-n) * a));
  }
  return {best, false};
}

DiophantineValue n_pair(CircleAngle alpha, CircleAngle beta, std::int64_t k,
                        ScanBudget budget) {
  check_k(k);
  if (k > 1'000'000'000LL || pair_candidates(k) > budget.max_candidates) {
    return {0.0, true};
  }
  const double a = alpha.turns();
  const double b = beta.turns();
  double best = std::numeric_limits<double>::infinity();
  for (std::int64_t n = -k; n <= k; ++n) {
    const std::int64_t mr = k - std::abs(n);
    const double na = static_cast<double>(n) * a;
    for (std::int64_t m = -mr; m <= mr; ++m) {
      if (n == 0 && m == 0) continue;
      best = std::min(best, nearest_integer_distance(na + static_cast<double>(m) * b));
    }
  }
  return {best, false};
}

ProfileResult n_pair_profile(CircleAngle alpha, CircleAngle beta, std::int64_t k_max,
                             ScanBudget budget) {
  check_k(k_max);
  ProfileResult result;
  // Largest k whose diamond fits the budget: 2k(k+1) <= max_candidates.
  const std::int64_t k_cap = std::min(k_max, std::int64_t{1'000'000'000});
  std::int64_t k_fit = static_cast<std::int64_t>(
      (std::sqrt(1.0 + 2.0 * static_cast<double>(budget.max_candidates)) - 1.0) / 2.0);
  k_fit = std::clamp(k_fit, std::int64_t{0}, k_cap);
  while (k_fit > 0 && pair_candidates(k_fit) > budget.max_candidates) --k_fit;
  while (k_fit < k_cap && pair_candidates(k_fit + 1) <= budget.max_candidates) ++k_fit;
  result.k_computed = k_fit;
  result.budget_exceeded = (k_fit < k_max);
  if (k_fit == 0) return result;

  const double a = alpha.turns();
  const double b = beta.turns();
  // shell_min[s] = min over |n| + |m| == s; prefix minima give N(k).
  std::vector<double> shell_min(static_cast<std::size_t>(k_fit) + 1,
                                std::numeric_limits<double>::infinity());
  for (std::int64_t n = -k_fit; n <= k_fit; ++n) {
    const std::int64_t mr = k_fit - std::abs(n);
    const double na = static_cast<double>(n) * a;
    for (std::int64_t m = -mr; m <= mr; ++m) {
      if (n == 0 && m == 0) continue;
      const std::size_t s = static_cast<std::size_t>(std::abs(n) + std::abs(m));
      shell_min[s] =
          std::min(shell_min[s], nearest_integer_distance(na + static_cast<double>(m) * b));
    }
  }
  result.values.resize(static_cast<std::size_t>(k_fit));
  double running = std::numeric_limits<double>::infinity();
  for (std::int64_t k = 1; k <= k_fit; ++k) {
    running = std::min(running, shell_min[static_cast<std::size_t>(k)]);
    result.values[static_cast<std::size_t>(k - 1)] = running;
  }
  return result;
}

ProfileResult n_single_profile(CircleAngle alpha, std::int64_t k_max, ScanBudget budget) {
  check_k(k_max);
  ProfileResult result;
  const std::int64_t k_fit =
      std::min(k_max, static_cast<std::int64_t>(budget.max_candidates / 2));
  result.k_computed = k_fit;
  result.budget_exceeded = (k_fit < k_max);
  if (k_fit == 0) return result;

  const double a = alpha.turns();
  result.values.resize(static_cast<std::size_t>(k_fit));
  double running = std::numeric_limits<double>::infinity();
  for (std::int64_t n = 1; n <= k_fit; ++n) {
    running = std::min(running, nearest_integer_distance(static_cast<double>(n) * a));
    running = std::min(running, nearest_integer_distance(static_cast<double>(-n) * a));
    result.values[static_cast<std::size_t>(n - 1)] = running;
  }
  return result;
}

std::vector<Convergent> convergents(double x, int depth) {
  if (!std::isfinite(x)) throw std::domain_error("convergents: non-finite input");
  if (x <= 0.0) throw std::domain_error("convergents: x must be positive");
  if (depth < 1) throw std::domain_error("convergents: depth must be >= 1");

  std::vector<Convergent> out;
  // p_k = a_k p_{k-1} + p_{k-2}, q_k likewise.
  std::int64_t p_prev2 = 1, q_prev2 = 0;  // p_{-1}/q_{-1}
  std::int64_t p_prev1 = 0, q_prev1 = 1;  // p_{-2}/q_{-2}, swapped into the recurrence below
  double y = x;
  constexpr std::int64_t kMaxDen = 1'000'000'000'000'000LL;

  for (int i = 0; i < depth; ++i) {
    const double af = std::floor(y);
    if (af > static_cast<double>(kMaxDen)) break;
    const std::int64_t a = static_cast<std::int64_t>(af);
    const std::int64_t p = a * p_prev2 + p_prev1;
    const std::int64_t q = a * q_prev2 + q_prev1;
    if (q > kMaxDen || q < 0) break;
    out.push_back({p, q});
    p_prev1 = p_prev2;
    q_prev1 = q_prev2;
    p_prev2 = p;
    q_prev2 = q;
    const double frac = y - af;
    if (frac < 1e-15) break;  // numerically rational
    y = 1.0 / frac;
  }
  return out;
}

}  // namespace kitebeam
