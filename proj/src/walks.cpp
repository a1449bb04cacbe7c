#include "kitebeam/walks.hpp"

#include <stdexcept>
#include <vector>

#include "kitebeam/rng.hpp"

namespace kitebeam {

namespace {

ConnectedSequence walk_with(CircleAngle alpha, CircleAngle beta, CircleAngle start,
                            std::size_t steps, std::uint64_t seed, double up_prob) {
  SplitMix64 rng(seed);
  std::vector<StepTag> tags;
  tags.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    const bool up = rng.uniform01() < up_prob;
    const bool use_alpha = rng.next() & 1;
    tags.push_back(up ? (use_alpha ? StepTag::plus_alpha : StepTag::plus_beta)
                      : (use_alpha ? StepTag::minus_alpha : StepTag::minus_beta));
  }
  return sequence_from_steps(alpha, beta, start, tags);
}

}  // namespace

ConnectedSequence random_walk(CircleAngle alpha, CircleAngle beta, CircleAngle start,
                              std::size_t steps, std::uint64_t seed) {
  return walk_with(alpha, beta, start, steps, seed, 0.5);
}

ConnectedSequence biased_walk(CircleAngle alpha, CircleAngle beta, CircleAngle start,
                              std::size_t steps, std::uint64_t seed, double up_prob) {
  if (!(up_prob >= 0.0 && up_prob <= 1.0)) {
    throw std::domain_error("biased_walk: up_prob must lie in [0, 1]");
  }
  return walk_with(alpha, beta, start, steps, seed, up_prob);
}

}  // namespace kitebeam
