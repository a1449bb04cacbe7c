#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kitebeam/unfolding.hpp"

namespace kitebeam {

inline constexpr double kTolAngle = 1e-9;  // closure rotation tolerance, radians

// Base of a parallel beam: a sub-segment [f0, f1] of a kite side whose
// projection across the travel direction spans exactly the beam width.
struct BeamBase {
  int side = 0;
  double f0 = 0.0;
  double f1 = 0.0;
  CircleAngle direction;
  double eps = 0.0;
};

// Builds a base centered at center_frac wide enough to span eps across
// the direction. Rejects grazing directions, bases that do not fit the
// side, and bases closer than eps to a side endpoint.
BeamBase make_beam_base(const Kite& kite, int side, double center_frac,
                        CircleAngle direction, double eps);

struct BeamCrossing {
  double t = 0.0;       // axis parameter of the crossing
  int side = 0;         // base-kite side index
  double frac_lo = 0.0; // strip footprint on the side, refolded fractions
  double frac_hi = 0.0;
};

// Propagation state: everything needed to re-test closure and re-verify
// split events after the fact.
struct Beam {
  BeamBase base;
  Vec2 origin = Vec2::Zero();  // base center
  Vec2 u = Vec2::Zero();       // unit direction
  Vec2 n = Vec2::Zero();       // unit normal (left of u)
  double T = 0.0;              // maximal parallel segment length so far
  std::vector<UnfoldingFrame> frames;
  std::vector<BeamCrossing> crossings;
};

struct SplitEvent {
  double T = 0.0;      // axial coordinate at which the strip meets the vertex
  Vec2 vertex = Vec2::Zero();
  double perp = 0.0;   // distance from the axis, < eps/2
  std::size_t copy = 0;
  int vertex_id = 0;   // base-kite vertex index
};

struct PeriodicOrbit {
  Vec2 start = Vec2::Zero();        // point on the base side
  Vec2 translation = Vec2::Zero();  // closing translation; period = |translation|
  double period = 0.0;
  std::size_t closing_crossing = 0;
};

struct PropagationOutcome {
  enum class Kind { split, periodic, undecided };
  Kind kind = Kind::undecided;
  double T = 0.0;
  std::size_t kite_count = 0;  // distinct copies met within length T
  std::optional<SplitEvent> split;
  std::optional<PeriodicOrbit> orbit;
};

// Advances the strip through the unfolding until a copy vertex enters the
// open strip (split), the base/end closure test fires (periodic), or the
// length budget runs out (undecided; never silent). The final state is
// written to *state when given.
PropagationOutcome propagate_beam(const Kite& kite, const BeamBase& base, double max_T,
                                  Beam* state = nullptr,
                                  std::size_t max_steps = 10'000'000);

// Closure test at the beam's latest completed crossing: the strip's
// footprint on that side, refolded, must land on the base side and
// overlap the base interval, and the isometry continuing the beam past
// that side must be a pure translation (rotation ~ 0 mod 2*pi, even
// reflection parity). Returns the closing orbit segment or nothing.
std::optional<PeriodicOrbit> detect_periodic(const Kite& kite, const Beam& beam);

struct IntersectionCountReport {
  std::size_t count = 0;
  double bound = 0.0;
  double c_used = 0.0;
};

// Copies met by the beam against the C*T/eps envelope.
IntersectionCountReport kite_intersection_count(const Beam& beam, double c_constant);

// Constant for the linear kite-count envelope: an analytic seed
// 2 / sin(theta_min / 2) from the sharpest interior angle, tightened by
// seeded chord sampling (chords clear of the vertices by eps_ref = 0.01
// must be longer than eps_ref / C), then a 1.1 safety factor.
double estimate_C(const Kite& kite, int samples, std::uint64_t seed);

}  // namespace kitebeam
