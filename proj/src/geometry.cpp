#include "kitebeam/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kitebeam {

Triangle::Triangle(double a, double b) : angle_a(a), angle_b(b) {
  if (!(a > 0.0) || !(b > 0.0) || !(a + b < std::numbers::pi)) {
    throw std::domain_error("Triangle: angles must be positive with sum below pi");
  }
}

Vec2 Kite::inward_normal(int side) const {
  const Vec2 d = (side_end(side) - side_start(side)).normalized();
  // vertices are ordered counterclockwise, so the interior is to the left
  return {-d.y(), d.x()};
}

double Kite::diameter() const {
  double best = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      best = std::max(best, (vertices[static_cast<std::size_t>(i)] -
                             vertices[static_cast<std::size_t>(j)])
                                .norm());
    }
  }
  return best;
}

double Kite::min_interior_angle() const {
  const double side_angle = std::numbers::pi - (alpha + beta) / 2.0;
  return std::min({alpha, beta, side_angle});
}

double Kite::area() const {
  double twice = 0.0;
  for (int i = 0; i < 4; ++i) {
    const Vec2 a = vertices[static_cast<std::size_t>(i)];
    const Vec2 b = vertices[static_cast<std::size_t>((i + 1) % 4)];
    twice += a.x() * b.y() - b.x() * a.y();
  }
  return 0.5 * std::abs(twice);
}

bool Kite::contains(const Vec2& p, double tol) const {
  for (int side = 0; side < 4; ++side) {
    const Vec2 a = side_start(side);
    const Vec2 d = side_end(side) - a;
    const double cross = d.x() * (p.y() - a.y()) - d.y() * (p.x() - a.x());
    if (cross < -tol) return false;
  }
  return true;
}

int default_reflecting_side(const Triangle& t) {
  const double a = t.angle_a, b = t.angle_b, c = t.angle_c();
  // side 0 endpoints: (A, B); side 1: (B, C); side 2: (C, A)
  if (c >= a && c >= b) return 0;
  if (a >= b && a >= c) return 1;
  return 2;
}

Kite kite_from_triangle(const Triangle& t, int reflecting_side) {
  if (reflecting_side < 0 || reflecting_side > 2) {
    throw std::domain_error("kite_from_triangle: side id must be 0, 1 or 2");
  }
  const double angles[3] = {t.angle_a, t.angle_b, t.angle_c()};
  for (double a : angles) {
    if (a < kTolKiteAngle) {
      throw std::domain_error("kite_from_triangle: degenerate triangle");
    }
  }
  // endpoint angles of the chosen side, in traversal order
  const int e0 = reflecting_side;             // side s joins vertex s ...
  const int e1 = (reflecting_side + 1) % 3;   // ... and vertex s+1
  const double a0 = angles[e0];
  const double a1 = angles[e1];
  const double apex = angles[(reflecting_side + 2) % 3];
  if (a0 >= std::numbers::pi / 2.0 - kTolKiteAngle / 2.0 ||
      a1 >= std::numbers::pi / 2.0 - kTolKiteAngle / 2.0) {
    throw std::domain_error(
        "kite_from_triangle: both angles adjacent to the reflecting side must be "
        "acute, otherwise a kite angle reaches pi");
  }

  // Reflecting side on the x axis with unit length; apex above it.
  const Vec2 p0(0.0, 0.0);
  const Vec2 p1(1.0, 0.0);
  // law of sines: |p0->apex| = sin(a1) / sin(apex)
  const double r0 = std::sin(a1) / std::sin(apex);
  Vec2 top(r0 * std::cos(a0), r0 * std::sin(a0));

  Kite k;
  k.vertices[0] = p0;
  k.vertices[1] = Vec2(top.x(), -top.y());
  k.vertices[2] = p1;
  k.vertices[3] = top;
  k.alpha = 2.0 * a0;
  k.beta = 2.0 * a1;

  if (k.alpha > k.beta) {
    // rotate half a turn about the diagonal midpoint so the smaller
    // doubled angle sits at vertex 0; orientation is preserved
    for (auto& v : k.vertices) v = Vec2(1.0 - v.x(), -v.y());
    std::swap(k.vertices[0], k.vertices[2]);
    std::swap(k.vertices[1], k.vertices[3]);
    std::swap(k.alpha, k.beta);
  }

  const double d = k.diameter();
  for (auto& v : k.vertices) v /= d;
  return k;
}

}  // namespace kitebeam
