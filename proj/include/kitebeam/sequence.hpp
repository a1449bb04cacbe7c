#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kitebeam/circle.hpp"

namespace kitebeam {

// Step tags of a connected walk on the circle. A step is one of the four
// signed generators; the walk's consecutive differences must match the
// tagged generator as circle elements.
enum class StepTag : std::uint8_t { plus_alpha, minus_alpha, plus_beta, minus_beta };

inline constexpr double kTolSeq = 1e-12;

// Signed step value in turns for a tag.
double step_value(StepTag tag, CircleAngle alpha, CircleAngle beta);

struct ConnectedSequence {
  CircleAngle alpha;
  CircleAngle beta;
  std::vector<CircleAngle> points;
  std::vector<StepTag> steps;  // steps.size() == points.size() - 1

  std::size_t size() const { return points.size(); }
};

ConnectedSequence sequence_from_steps(CircleAngle alpha, CircleAngle beta,
                                      CircleAngle start, std::span<const StepTag> steps);

// Re-derives tags from consecutive point differences. Ambiguities (alpha
// and beta steps indistinguishable, e.g. alpha == beta) resolve to the
// alpha tag. Throws when a difference matches no generator within tol.
std::vector<StepTag> derive_steps(std::span<const CircleAngle> points, CircleAngle alpha,
                                  CircleAngle beta, double tol = kTolSeq);

// Checks every tagged step against the actual circle difference.
void validate_sequence(const ConnectedSequence& seq, double tol = kTolSeq);

}  // namespace kitebeam
