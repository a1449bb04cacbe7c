#pragma once

#include <cstdint>

#include "kitebeam/sequence.hpp"

namespace kitebeam {

// Seeded walk generators. Steps are i.i.d.; random_walk draws the four
// generators uniformly, biased_walk raises the probability of the two
// positive generators to up_prob (split evenly), which is what the
// commensurate net construction needs to reach deep shadow intervals.
ConnectedSequence random_walk(CircleAngle alpha, CircleAngle beta, CircleAngle start,
                              std::size_t steps, std::uint64_t seed);

ConnectedSequence biased_walk(CircleAngle alpha, CircleAngle beta, CircleAngle start,
                              std::size_t steps, std::uint64_t seed, double up_prob);

}  // namespace kitebeam
