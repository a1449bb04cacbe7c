#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "kitebeam/errors.hpp"
#include "kitebeam/net_construction.hpp"
#include "kitebeam/rng.hpp"
#include "kitebeam/walks.hpp"

using namespace kitebeam;

namespace {

// gamma designed so the first admissible pigeonhole multiple is 2*(p+q):
// gamma = (r + xi * delta) / (2 (p+q)) with |xi| < 1/2.
CircleAngle designed_gamma(int p, int q, double eps, double xi, int r) {
  const double delta = std::pow(eps / 100.0, p + q);
  const int n0 = 2 * (p + q);
  return CircleAngle::from_turns((static_cast<double>(r) + xi * delta) / n0);
}

std::int64_t shadow_reach(const ConnectedSequence& seq, int p, int q) {
  std::int64_t s = 0, best = 0;
  for (StepTag tag : seq.steps) {
    switch (tag) {
      case StepTag::plus_alpha: s += p; break;
      case StepTag::minus_alpha: s -= p; break;
      case StepTag::plus_beta: s += q; break;
      case StepTag::minus_beta: s -= q; break;
    }
    best = std::max({best, s, -s});
  }
  return best;
}

}  // namespace

TEST_CASE("pigeonhole multiple search honors the designed gamma") {
  const double eps = 0.4;
  const int p = 1, q = 1;
  const double delta = std::pow(eps / 100.0, p + q);
  const auto gamma = designed_gamma(p, q, eps, 0.31, 1);
  const std::int64_t n0 = find_pigeonhole_multiple(gamma, p + q, delta, 1u << 30);
  CHECK(n0 == 2 * (p + q));
  CHECK(n0 <= (p + q) * static_cast<std::int64_t>(std::ceil(1.0 / delta)));
  CHECK(nearest_integer_distance(static_cast<double>(n0) * gamma.turns()) < delta);
  CHECK_THROWS_AS(find_pigeonhole_multiple(gamma, p + q, 1e-12, 1000), BudgetError);
}

TEST_CASE("commensurate construction: equal generators, biased walk") {
  const int p = 1, q = 1;
  const double eps = 0.35;
  const auto gamma = designed_gamma(p, q, eps, -0.27, 1);
  const auto alpha = gamma.times(p);
  const auto beta = gamma.times(q);
  const double delta = std::pow(eps / 100.0, p + q);
  const auto k_intervals = static_cast<std::int64_t>(std::floor(1.0 / delta));
  const std::int64_t reach = k_intervals * 2 * (p + q);
  const auto len = static_cast<std::size_t>(static_cast<double>(reach) / 0.8 * 1.3);
  const auto walk = biased_walk(alpha, beta, CircleAngle::from_turns(0.05), len, 77, 0.9);
  REQUIRE(shadow_reach(walk, p, q) >= reach);

  const auto result = commensurate_net_construction(p, q, gamma, walk, eps);
  CHECK(result.n0 == 2 * (p + q));
  CHECK(result.n0 <= (p + q) * static_cast<std::int64_t>(std::ceil(1.0 / delta)));
  CHECK(result.k_intervals == k_intervals);
  CHECK(result.color_offset >= 0);
  CHECK(result.color_offset < p + q);
  CHECK(witness_verifies_circle(result.witness, walk.points));
  CHECK(result.witness.segment.width() < 1.0);
}

TEST_CASE("commensurate construction: p = 1, q = 2 at eps = 1/2") {
  const int p = 1, q = 2;
  const double eps = 0.5;
  const auto gamma = designed_gamma(p, q, eps, 0.4, 1);
  const auto alpha = gamma.times(p);
  const auto beta = gamma.times(q);
  const double delta = std::pow(eps / 100.0, p + q);
  const auto k_intervals = static_cast<std::int64_t>(std::floor(1.0 / delta));
  const std::int64_t reach = k_intervals * 2 * (p + q);
  const auto len = static_cast<std::size_t>(static_cast<double>(reach) / (0.8 * 1.5) * 1.3);
  const auto walk = biased_walk(alpha, beta, CircleAngle::from_turns(0.9), len, 5, 0.9);
  REQUIRE(shadow_reach(walk, p, q) >= reach);

  const auto result = commensurate_net_construction(p, q, gamma, walk, eps);
  CHECK(witness_verifies_circle(result.witness, walk.points));
  CHECK(result.delta == delta);
}

TEST_CASE("commensurate construction: downward walks run the mirrored side") {
  const int p = 1, q = 1;
  const double eps = 0.4;
  const auto gamma = designed_gamma(p, q, eps, 0.33, 1);
  const auto alpha = gamma.times(p);
  const auto beta = gamma.times(q);
  const double delta = std::pow(eps / 100.0, p + q);
  const auto k_intervals = static_cast<std::int64_t>(std::floor(1.0 / delta));
  const std::int64_t reach = k_intervals * 2 * (p + q);
  const auto len = static_cast<std::size_t>(static_cast<double>(reach) / 0.8 * 1.3);
  const auto walk = biased_walk(alpha, beta, CircleAngle::from_turns(0.41), len, 13, 0.1);
  REQUIRE(shadow_reach(walk, p, q) >= reach);

  const auto result = commensurate_net_construction(p, q, gamma, walk, eps);
  CHECK(result.mirrored);
  CHECK(witness_verifies_circle(result.witness, walk.points));
}

TEST_CASE("commensurate construction diagnoses short walks") {
  const int p = 1, q = 1;
  const double eps = 0.4;
  const auto gamma = designed_gamma(p, q, eps, 0.2, 1);
  const auto alpha = gamma.times(p);
  const auto beta = gamma.times(q);

  // a walk whose shadow oscillates inside [0, p+q]
  std::vector<StepTag> tags;
  for (int i = 0; i < 2000; ++i) {
    tags.push_back(i % 2 ? StepTag::minus_alpha : StepTag::plus_alpha);
  }
  const auto fence = sequence_from_steps(alpha, beta, CircleAngle::from_turns(0.0), tags);
  try {
    commensurate_net_construction(p, q, gamma, fence, eps);
    FAIL("expected InsufficientLengthError");
  } catch (const InsufficientLengthError& e) {
    CHECK(e.first_uncovered_k() == 1);
  }

  // a walk that gets partway: diagnosis names the first unreached interval
  const auto partial = biased_walk(alpha, beta, CircleAngle::from_turns(0.0), 5000, 3, 0.9);
  const std::int64_t reach = shadow_reach(partial, p, q);
  const std::int64_t n0 = 2 * (p + q);
  try {
    commensurate_net_construction(p, q, gamma, partial, eps);
    FAIL("expected InsufficientLengthError");
  } catch (const InsufficientLengthError& e) {
    CHECK(e.first_uncovered_k() == reach / n0 + 1);
  }
}

TEST_CASE("commensurate construction validates its generators") {
  const auto gamma = designed_gamma(1, 1, 0.4, 0.2, 1);
  const auto wrong = CircleAngle::from_turns(0.123);
  const auto walk = biased_walk(wrong, wrong, CircleAngle::from_turns(0.0), 50, 1, 0.9);
  CHECK_THROWS_AS(commensurate_net_construction(1, 1, gamma, walk, 0.4),
                  std::domain_error);
  const auto ok_walk =
      biased_walk(gamma.times(1), gamma.times(1), CircleAngle::from_turns(0.0), 50, 1, 0.9);
  CHECK_THROWS_AS(commensurate_net_construction(1, 1, gamma, ok_walk, 0.7),
                  std::domain_error);  // eps beyond 1/2
}

TEST_CASE("first net prefix: uniform climb is bounded by the width requirement") {
  // dyadic step so every hull width is exact
  const auto alpha = CircleAngle::from_turns(0.015625);  // 1/64
  const auto beta = CircleAngle::from_turns(0.109375);
  std::vector<StepTag> tags(40, StepTag::plus_alpha);
  const auto seq = sequence_from_steps(alpha, beta, CircleAngle::from_turns(0.0), tags);
  const auto res = first_net_prefix(seq, 0.25, 0.078125);  // min width 5/64
  REQUIRE(res.has_value());
  // hull (m-1)/64 reaches 5/64 at m = 6; the gap condition is already met at m = 3
  CHECK(res->index == 6);
  CHECK(res->witness.segment.width() == 0.078125);
  CHECK(res->witness.indices.size() == 6);
  CHECK(witness_verifies_circle(res->witness, seq.points));

  // a two-point sequence with an oversized width requirement has no net
  std::vector<StepTag> one = {StepTag::plus_alpha};
  const auto tiny = sequence_from_steps(alpha, beta, CircleAngle::from_turns(0.0), one);
  CHECK(!first_net_prefix(tiny, 0.25, 0.5).has_value());
}

TEST_CASE("first net prefix: random walks produce verified witnesses at minimal length") {
  const auto alpha = CircleAngle::from_turns(0.41421356237309515);
  const auto beta = CircleAngle::from_turns(0.7320508075688772);
  SplitMix64 seeds(1001);
  int found = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto walk =
        random_walk(alpha, beta, CircleAngle::from_turns(0.0), 4000, seeds.next());
    const auto res = first_net_prefix(walk, 0.1, 0.05);
    if (!res) continue;
    ++found;
    CHECK(witness_verifies_circle(res->witness, walk.points));
    CHECK(res->witness.segment.width() >= 0.05);
    // minimality: the prefix one point shorter has no qualifying arc
    ConnectedSequence shorter = walk;
    shorter.points.resize(res->index - 1);
    shorter.steps.resize(res->index - 2);
    CHECK(!first_net_prefix(shorter, 0.1, 0.05).has_value());
  }
  CHECK(found == 200);  // these generators spread fast; every walk qualifies
}

TEST_CASE("first net prefix: rotation equivariance") {
  const auto alpha = CircleAngle::from_turns(0.41421356237309515);
  const auto beta = CircleAngle::from_turns(0.7320508075688772);
  const auto walk = random_walk(alpha, beta, CircleAngle::from_turns(0.0), 600, 99);
  const auto base = first_net_prefix(walk, 0.12, 0.05);
  REQUIRE(base.has_value());

  const double rot = 0.37;
  ConnectedSequence moved = walk;
  for (auto& pt : moved.points) pt = CircleAngle::from_turns(pt.turns() + rot);
  const auto res = first_net_prefix(moved, 0.12, 0.05);
  REQUIRE(res.has_value());
  CHECK(res->index == base->index);
  CHECK(res->witness.indices == base->witness.indices);
  CHECK(wrap_unit(res->witness.segment.lo - base->witness.segment.lo) ==
        doctest::Approx(rot).epsilon(1e-9));
  CHECK(res->witness.segment.width() ==
        doctest::Approx(base->witness.segment.width()).epsilon(1e-9));
}

TEST_CASE("net function estimate: deterministic and partition independent") {
  const auto alpha = CircleAngle::from_turns(0.41421356237309515);
  const auto beta = CircleAngle::from_turns(0.7320508075688772);
  const auto a = estimate_net_function(alpha, beta, 0.2, 0.05, 300, 2000, 7, 1);
  const auto b = estimate_net_function(alpha, beta, 0.2, 0.05, 300, 2000, 7, 2);
  const auto c = estimate_net_function(alpha, beta, 0.2, 0.05, 300, 2000, 7, 3);
  CHECK(a.empirical_F_lower == b.empirical_F_lower);
  CHECK(a.histogram == b.histogram);
  CHECK(a.histogram == c.histogram);
  CHECK(a.censored == b.censored);

  std::int64_t total = a.censored;
  for (const auto& [len, count] : a.histogram) {
    total += count;
    CHECK(len >= 2);
  }
  CHECK(total == 300);
  CHECK(a.empirical_F_lower > 0);
}

TEST_CASE("net function estimate: degenerate equal angles still defined") {
  const auto g = CircleAngle::from_turns(0.1234567);
  const auto est = estimate_net_function(g, g, 0.2, 0.05, 50, 3000, 11);
  std::int64_t total = est.censored;
  for (const auto& [len, count] : est.histogram) total += count;
  CHECK(total == 50);
}

TEST_CASE("net function estimate: lower bound grows with more samples") {
  const auto alpha = CircleAngle::from_turns(0.41421356237309515);
  const auto beta = CircleAngle::from_turns(0.7320508075688772);
  const auto small = estimate_net_function(alpha, beta, 0.2, 0.05, 100, 2000, 21);
  const auto large = estimate_net_function(alpha, beta, 0.2, 0.05, 1000, 2000, 21);
  CHECK(large.empirical_F_lower >= small.empirical_F_lower);
}
