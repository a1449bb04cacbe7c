#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kitebeam/geometry.hpp"

namespace kitebeam {

// One unfolded copy of the kite: the isometry mapping the base kite onto
// it, the side it was entered through, and theta, the turn angle between
// the copy's oriented main-diagonal image and the ray direction.
// Consecutive theta values differ by one of the four generators
// (+-alpha, +-beta), which is the hinge the whole circle layer sits on.
template <typename Scalar>
struct UnfoldingFrameT {
  IsometryT<Scalar> frame;
  int entry_side = 0;
  BasicCircleAngle<Scalar> theta;
  Scalar entry_t = 0;  // ray parameter at which the copy was entered
};

template <typename Scalar>
struct RayCrossingT {
  Scalar t = 0;  // distance from the start along the ray
  int side = 0;  // base-kite side index of the crossed side
  Scalar frac = 0;
  Eigen::Matrix<Scalar, 2, 1> point;
};

enum class StopReason { step_limit, length_limit, vertex_hit };

template <typename Scalar>
struct UnfoldResultT {
  std::vector<UnfoldingFrameT<Scalar>> frames;  // frames[0] is the base copy
  std::vector<RayCrossingT<Scalar>> crossings;
  StopReason stop = StopReason::step_limit;
  std::optional<Eigen::Matrix<Scalar, 2, 1>> vertex;  // terminal vertex position
  Scalar length = 0;
};

using UnfoldingFrame = UnfoldingFrameT<double>;
using RayCrossing = RayCrossingT<double>;
using UnfoldResult = UnfoldResultT<double>;

// Traces a straight ray from a boundary point through successive
// reflected copies. The start must sit strictly inside a side and the
// direction must point into the kite. A pass within kTolVertex of a copy
// vertex terminates the trace (the construction is undefined there).
UnfoldResult unfold_ray(const Kite& kite, int side, double frac, CircleAngle direction,
                        std::size_t max_steps, double max_length);

template <typename Scalar>
UnfoldResultT<Scalar> unfold_ray_t(const Kite& kite, int side, Scalar frac,
                                   Scalar direction_turns, std::size_t max_steps,
                                   Scalar max_length);

// Classical mirror-law simulation inside the fixed kite. Kept fully
// independent of unfold_ray so the two can cross-check each other, and
// templated on the scalar so the extended-precision instantiation can act
// as the oracle in sensitive comparisons.
template <typename Scalar>
struct FoldStepT {
  Eigen::Matrix<Scalar, 2, 1> point;
  Scalar segment_length = 0;
  int side = 0;
};

template <typename Scalar>
struct FoldResultT {
  std::vector<FoldStepT<Scalar>> reflections;
  StopReason stop = StopReason::step_limit;
  std::optional<Eigen::Matrix<Scalar, 2, 1>> vertex;
  Eigen::Matrix<Scalar, 2, 1> final_point;
  Eigen::Matrix<Scalar, 2, 1> final_direction;
};

using FoldStep = FoldStepT<double>;
using FoldResult = FoldResultT<double>;

template <typename Scalar>
FoldResultT<Scalar> fold_trajectory_t(const Kite& kite, int side, Scalar frac,
                                      Scalar direction_turns, std::size_t max_steps);

FoldResult fold_trajectory(const Kite& kite, int side, double frac, CircleAngle direction,
                           std::size_t max_steps);

Vec2 unit_from_turns(CircleAngle direction);

// --- implementation ---------------------------------------------------------

template <typename Scalar>
UnfoldResultT<Scalar> unfold_ray_t(const Kite& kite, int side, Scalar frac,
                                   Scalar direction_turns, std::size_t max_steps,
                                   Scalar max_length) {
  using V = Eigen::Matrix<Scalar, 2, 1>;
  if (side < 0 || side > 3) throw std::domain_error("unfold: side id must be 0..3");

  std::array<V, 4> verts;
  for (int i = 0; i < 4; ++i) verts[static_cast<std::size_t>(i)] =
      kite.vertices[static_cast<std::size_t>(i)].cast<Scalar>();
  auto start_of = [&](int j) { return verts[static_cast<std::size_t>(j)]; };
  auto end_of = [&](int j) { return verts[static_cast<std::size_t>((j + 1) % 4)]; };

  const Scalar rad = direction_turns * two_pi_v<Scalar>;
  const V u(std::cos(rad), std::sin(rad));
  const V origin = start_of(side) + frac * (end_of(side) - start_of(side));
  {
    const V d = (end_of(side) - start_of(side)).normalized();
    const V inward(-d.y(), d.x());
    if (!(u.dot(inward) > Scalar(0))) {
      throw std::domain_error("unfold: direction must point into the kite");
    }
    const Scalar len = (end_of(side) - start_of(side)).norm();
    if (!(frac * len > Scalar(kTolVertex) && (Scalar(1) - frac) * len > Scalar(kTolVertex))) {
      throw std::domain_error("unfold: start must sit strictly inside the side");
    }
  }

  UnfoldResultT<Scalar> result;
  IsometryT<Scalar> g = IsometryT<Scalar>::identity();
  auto theta_of = [&](const IsometryT<Scalar>& iso) {
    const V diag = iso.apply(verts[2]) - iso.apply(verts[0]);
    const Scalar diag_turns = std::atan2(diag.y(), diag.x()) / two_pi_v<Scalar>;
    return BasicCircleAngle<Scalar>::from_turns(diag_turns - direction_turns);
  };
  result.frames.push_back({g, side, theta_of(g), Scalar(0)});

  int entry = side;
  Scalar t_cur = 0;
  for (std::size_t step = 0; step < max_steps; ++step) {
    Scalar best_t = std::numeric_limits<Scalar>::infinity();
    int best_side = -1;
    Scalar best_s = 0;
    V best_a = V::Zero(), best_b = V::Zero();
    for (int j = 0; j < 4; ++j) {
      if (j == entry) continue;
      const V a = g.apply(start_of(j));
      const V b = g.apply(end_of(j));
      const V v = b - a;
      const Scalar denom = u.x() * v.y() - u.y() * v.x();
      if (std::abs(denom) < Scalar(1e-300)) continue;
      const V w = a - origin;
      const Scalar t = (w.x() * v.y() - w.y() * v.x()) / denom;
      const Scalar s = (w.x() * u.y() - w.y() * u.x()) / denom;
      if (t <= t_cur + Scalar(1e-15) || s < Scalar(-1e-9) || s > Scalar(1) + Scalar(1e-9)) {
        continue;
      }
      if (t < best_t) {
        best_t = t;
        best_side = j;
        best_s = s;
        best_a = a;
        best_b = b;
      }
    }
    if (best_side < 0) {
      throw std::runtime_error("unfold: ray found no exit side (numerical failure)");
    }
    if (best_t > max_length) {
      result.stop = StopReason::length_limit;
      result.length = max_length;
      return result;
    }

    const V hit = origin + best_t * u;
    if ((hit - best_a).norm() < Scalar(kTolVertex) ||
        (hit - best_b).norm() < Scalar(kTolVertex)) {
      result.stop = StopReason::vertex_hit;
      result.vertex = (hit - best_a).norm() < Scalar(kTolVertex) ? best_a : best_b;
      result.length = best_t;
      return result;
    }

    result.crossings.push_back({best_t, best_side, best_s, hit});
    t_cur = best_t;

    g = g.then(IsometryT<Scalar>::reflection_across(best_a, best_b));
    if ((step + 1) % 1024 == 0) g.renormalize();
    entry = best_side;
    result.frames.push_back({g, best_side, theta_of(g), best_t});
    result.length = best_t;
  }
  result.stop = StopReason::step_limit;
  return result;
}

template <typename Scalar>
FoldResultT<Scalar> fold_trajectory_t(const Kite& kite, int side, Scalar frac,
                                      Scalar direction_turns, std::size_t max_steps) {
  using V = Eigen::Matrix<Scalar, 2, 1>;
  if (side < 0 || side > 3) throw std::domain_error("fold: side id must be 0..3");

  std::array<V, 4> verts;
  for (int i = 0; i < 4; ++i) verts[static_cast<std::size_t>(i)] =
      kite.vertices[static_cast<std::size_t>(i)].cast<Scalar>();
  auto start_of = [&](int j) { return verts[static_cast<std::size_t>(j)]; };
  auto end_of = [&](int j) { return verts[static_cast<std::size_t>((j + 1) % 4)]; };

  const Scalar rad = direction_turns * two_pi_v<Scalar>;
  V w(std::cos(rad), std::sin(rad));
  V x = start_of(side) + frac * (end_of(side) - start_of(side));
  {
    const V d = (end_of(side) - start_of(side)).normalized();
    const V inward(-d.y(), d.x());
    if (!(w.dot(inward) > Scalar(0))) {
      throw std::domain_error("fold: direction must point into the kite");
    }
    const Scalar len = (end_of(side) - start_of(side)).norm();
    if (!(frac * len > Scalar(kTolVertex) && (Scalar(1) - frac) * len > Scalar(kTolVertex))) {
      throw std::domain_error("fold: start must sit strictly inside the side");
    }
  }

  FoldResultT<Scalar> result;
  int entry = side;
  for (std::size_t step = 0; step < max_steps; ++step) {
    Scalar best_t = std::numeric_limits<Scalar>::infinity();
    int best_side = -1;
    for (int j = 0; j < 4; ++j) {
      if (j == entry) continue;
      const V a = start_of(j);
      const V v = end_of(j) - a;
      const Scalar denom = w.x() * v.y() - w.y() * v.x();
      if (std::abs(denom) < Scalar(1e-300)) continue;
      const V rel = a - x;
      const Scalar t = (rel.x() * v.y() - rel.y() * v.x()) / denom;
      const Scalar s = (rel.x() * w.y() - rel.y() * w.x()) / denom;
      if (t <= Scalar(1e-15) || s < Scalar(-1e-9) || s > Scalar(1) + Scalar(1e-9)) continue;
      if (t < best_t) {
        best_t = t;
        best_side = j;
      }
    }
    if (best_side < 0) {
      throw std::runtime_error("fold: no exit side (numerical failure)");
    }
    const V a = start_of(best_side);
    const V b = end_of(best_side);
    V hit = x + best_t * w;
    if ((hit - a).norm() < Scalar(kTolVertex) || (hit - b).norm() < Scalar(kTolVertex)) {
      result.stop = StopReason::vertex_hit;
      result.vertex = (hit - a).norm() < Scalar(kTolVertex) ? a : b;
      result.final_point = hit;
      result.final_direction = w;
      return result;
    }
    // snap onto the side line: the perpendicular residue is pure noise and
    // would be amplified by later shallow bounces
    const V d = (b - a).normalized();
    hit = a + (hit - a).dot(d) * d;
    const V n(-d.y(), d.x());
    w = (w - Scalar(2) * w.dot(n) * n).normalized();
    x = hit;
    entry = best_side;
    result.reflections.push_back({hit, best_t, best_side});
  }
  result.stop = StopReason::step_limit;
  result.final_point = x;
  result.final_direction = w;
  return result;
}

}  // namespace kitebeam
