#include "kitebeam/unfolding.hpp"

#include <cmath>

namespace kitebeam {

Vec2 unit_from_turns(CircleAngle direction) {
  const double rad = direction.radians();
  return {std::cos(rad), std::sin(rad)};
}

UnfoldResult unfold_ray(const Kite& kite, int side, double frac, CircleAngle direction,
                        std::size_t max_steps, double max_length) {
  return unfold_ray_t<double>(kite, side, frac, direction.turns(), max_steps, max_length);
}

FoldResult fold_trajectory(const Kite& kite, int side, double frac, CircleAngle direction,
                           std::size_t max_steps) {
  return fold_trajectory_t<double>(kite, side, frac, direction.turns(), max_steps);
}

}  // namespace kitebeam
