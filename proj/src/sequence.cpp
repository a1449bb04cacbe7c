#include "kitebeam/sequence.hpp"

#include <stdexcept>
#include <string>

namespace kitebeam {

double step_value(StepTag tag, CircleAngle alpha, CircleAngle beta) {
  switch (tag) {
    case StepTag::plus_alpha: return alpha.turns();
    case StepTag::minus_alpha: return -alpha.turns();
    case StepTag::plus_beta: return beta.turns();
    case StepTag::minus_beta: return -beta.turns();
  }
  throw std::logic_error("step_value: bad tag");
}

ConnectedSequence sequence_from_steps(CircleAngle alpha, CircleAngle beta,
                                      CircleAngle start, std::span<const StepTag> steps) {
  ConnectedSequence seq;
  seq.alpha = alpha;
  seq.beta = beta;
  seq.points.reserve(steps.size() + 1);
  seq.steps.assign(steps.begin(), steps.end());
  CircleAngle x = start;
  seq.points.push_back(x);
  for (StepTag tag : steps) {
    x = CircleAngle::from_turns(x.turns() + step_value(tag, alpha, beta));
    seq.points.push_back(x);
  }
  return seq;
}

std::vector<StepTag> derive_steps(std::span<const CircleAngle> points, CircleAngle alpha,
                                  CircleAngle beta, double tol) {
  std::vector<StepTag> tags;
  if (points.size() < 2) return tags;
  tags.reserve(points.size() - 1);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const double diff = points[i + 1].turns() - points[i].turns();
    StepTag tag;
    if (nearest_integer_distance(diff - alpha.turns()) <= tol) {
      tag = StepTag::plus_alpha;
    } else if (nearest_integer_distance(diff + alpha.turns()) <= tol) {
      tag = StepTag::minus_alpha;
    } else if (nearest_integer_distance(diff - beta.turns()) <= tol) {
      tag = StepTag::plus_beta;
    } else if (nearest_integer_distance(diff + beta.turns()) <= tol) {
      tag = StepTag::minus_beta;
    } else {
      throw std::domain_error("derive_steps: difference at index " + std::to_string(i) +
                              " matches no generator");
    }
    tags.push_back(tag);
  }
  return tags;
}

void validate_sequence(const ConnectedSequence& seq, double tol) {
  if (seq.points.empty()) throw std::domain_error("validate_sequence: empty sequence");
  if (seq.steps.size() + 1 != seq.points.size()) {
    throw std::domain_error("validate_sequence: steps/points size mismatch");
  }
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const double diff = seq.points[i + 1].turns() - seq.points[i].turns();
    const double want = step_value(seq.steps[i], seq.alpha, seq.beta);
    if (nearest_integer_distance(diff - want) > tol) {
      throw std::domain_error("validate_sequence: step " + std::to_string(i) +
                              " does not match its tag");
    }
  }
}

}  // namespace kitebeam
