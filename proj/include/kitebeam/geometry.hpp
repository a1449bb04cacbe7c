#pragma once

#include <Eigen/Dense>
#include <array>

#include "kitebeam/circle.hpp"

namespace kitebeam {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

// Planar rigid motion with an explicit reflection parity bit, templated on
// the scalar so unfolding chains can also run at extended precision.
// Rotation parts are re-orthonormalized periodically by long loops.
template <typename Scalar>
struct IsometryT {
  using Vec = Eigen::Matrix<Scalar, 2, 1>;
  using Mat = Eigen::Matrix<Scalar, 2, 2>;

  Mat rot = Mat::Identity();
  Vec shift = Vec::Zero();
  bool reflecting = false;  // det(rot) < 0

  Vec apply(const Vec& p) const { return rot * p + shift; }
  Vec apply_dir(const Vec& d) const { return rot * d; }

  IsometryT then(const IsometryT& outer) const {
    // outer o this
    return {outer.rot * rot, outer.rot * shift + outer.shift,
            outer.reflecting != reflecting};
  }

  IsometryT inverse() const {
    const Mat rt = rot.transpose();
    return {rt, Vec(-(rt * shift)), reflecting};
  }

  // Rotation angle in radians, in (-pi, pi]. Meaningful for even parity.
  Scalar rotation_angle() const { return std::atan2(rot(1, 0), rot(0, 0)); }

  // Gram-Schmidt pass preserving the determinant sign.
  void renormalize() {
    Vec c0 = rot.col(0);
    c0.normalize();
    Vec c1 = rot.col(1);
    c1 -= c0 * c0.dot(c1);
    c1.normalize();
    rot.col(0) = c0;
    rot.col(1) = c1;
  }

  static IsometryT identity() { return {}; }

  static IsometryT reflection_across(const Vec& a, const Vec& b) {
    const Vec d = (b - a).normalized();
    Mat r;
    // Householder reflection about the line direction d.
    r(0, 0) = d.x() * d.x() - d.y() * d.y();
    r(0, 1) = Scalar(2) * d.x() * d.y();
    r(1, 0) = r(0, 1);
    r(1, 1) = -r(0, 0);
    IsometryT iso;
    iso.rot = r;
    iso.shift = a - r * a;
    iso.reflecting = true;
    return iso;
  }
};

using Isometry = IsometryT<double>;

struct Triangle {
  double angle_a = 0.0;  // radians, at vertex A
  double angle_b = 0.0;  // radians, at vertex B

  Triangle(double a, double b);
  double angle_c() const { return std::numbers::pi - angle_a - angle_b; }
};

// Symmetric quadrilateral obtained by reflecting a triangle across one of
// its sides. The reflecting side becomes the interior main diagonal; the
// angle at either of its endpoints doubles. Canonical pose: the smaller
// diagonal angle (alpha) sits at the origin, the main diagonal runs along
// +x, vertex 1 lies below the axis, vertex 3 mirrors it above, and the
// diameter (largest pairwise vertex distance) is 1.
struct Kite {
  std::array<Vec2, 4> vertices;  // [0]=alpha vertex, [2]=beta vertex
  double alpha = 0.0;            // radians, alpha <= beta
  double beta = 0.0;

  CircleAngle alpha_turns() const { return CircleAngle::from_radians(alpha); }
  CircleAngle beta_turns() const { return CircleAngle::from_radians(beta); }

  // Side i runs from vertex i to vertex (i+1) % 4.
  Vec2 side_start(int side) const { return vertices[static_cast<std::size_t>(side)]; }
  Vec2 side_end(int side) const { return vertices[static_cast<std::size_t>((side + 1) % 4)]; }
  double side_length(int side) const { return (side_end(side) - side_start(side)).norm(); }
  Vec2 point_on_side(int side, double frac) const {
    return side_start(side) + frac * (side_end(side) - side_start(side));
  }
  Vec2 inward_normal(int side) const;

  double diameter() const;
  double diagonal_length() const { return (vertices[2] - vertices[0]).norm(); }
  double min_interior_angle() const;
  double area() const;
  bool contains(const Vec2& p, double tol = 0.0) const;
};

inline constexpr double kTolVertex = 1e-12;  // vertex-hit radius at diameter 1
inline constexpr double kTolKiteAngle = 1e-9;

// Reflecting side s of the triangle joins the vertices listed below; both
// of its endpoint angles must be acute so the kite angles stay below pi.
//   side 0: A-B,  side 1: B-C,  side 2: C-A
Kite kite_from_triangle(const Triangle& t, int reflecting_side);

// Side whose endpoint angles are the two smallest (always valid).
int default_reflecting_side(const Triangle& t);

}  // namespace kitebeam
