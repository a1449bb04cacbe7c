#include "kitebeam/beam.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "kitebeam/rng.hpp"

namespace kitebeam {

BeamBase make_beam_base(const Kite& kite, int side, double center_frac,
                        CircleAngle direction, double eps) {
  if (side < 0 || side > 3) throw std::domain_error("make_beam_base: side id must be 0..3");
  if (!(eps > 0.0)) throw std::domain_error("make_beam_base: eps must be positive");
  const Vec2 u = unit_from_turns(direction);
  if (!(u.dot(kite.inward_normal(side)) > 1e-12)) {
    throw std::domain_error("make_beam_base: direction must point into the kite");
  }
  const Vec2 a = kite.side_start(side);
  const Vec2 b = kite.side_end(side);
  const Vec2 d = (b - a).normalized();
  const double sine = std::abs(d.x() * u.y() - d.y() * u.x());
  if (sine < 1e-9) throw std::domain_error("make_beam_base: direction grazes the side");
  const double side_len = kite.side_length(side);
  const double base_len = eps / sine;
  const double half_frac = base_len / (2.0 * side_len);
  const double clearance = eps / side_len;  // keep the base eps away from the endpoints
  if (center_frac - half_frac < clearance || center_frac + half_frac > 1.0 - clearance) {
    throw std::domain_error("make_beam_base: base does not fit the side");
  }
  if (!(eps < side_len)) {
    throw std::domain_error("make_beam_base: eps must be below the side length");
  }
  return {side, center_frac - half_frac, center_frac + half_frac, direction, eps};
}

namespace {

struct StripFootprint {
  bool crosses = false;
  double lo = 0.0;
  double hi = 0.0;
};

// Footprint of the strip |(p - origin) . n| <= eps/2 on the segment a->b,
// in segment fractions.
StripFootprint strip_on_segment(const Vec2& a, const Vec2& b, const Vec2& origin,
                                const Vec2& n, double eps) {
  const double c0 = (a - origin).dot(n);
  const double c1 = (b - a).dot(n);
  const double half = eps / 2.0;
  StripFootprint fp;
  if (std::abs(c1) < 1e-300) {
    if (std::abs(c0) <= half) {
      fp = {true, 0.0, 1.0};
    }
    return fp;
  }
  double s0 = (-half - c0) / c1;
  double s1 = (half - c0) / c1;
  if (s0 > s1) std::swap(s0, s1);
  s0 = std::max(s0, 0.0);
  s1 = std::min(s1, 1.0);
  if (s0 <= s1) fp = {true, s0, s1};
  return fp;
}

constexpr int kRenormalizeEvery = 1024;

}  // namespace

std::optional<PeriodicOrbit> detect_periodic(const Kite& kite, const Beam& beam) {
  if (beam.crossings.empty()) {
    throw std::domain_error("detect_periodic: beam has no completed crossing");
  }
  const BeamCrossing& cr = beam.crossings.back();
  if (cr.side != beam.base.side) return std::nullopt;
  // overlap of the refolded end footprint with the base interval
  const double lo = std::max(cr.frac_lo, beam.base.f0);
  const double hi = std::min(cr.frac_hi, beam.base.f1);
  if (!(hi > lo)) return std::nullopt;

  // isometry continuing the beam past the end side
  const Isometry& g = beam.frames[beam.crossings.size() - 1].frame;
  const Vec2 a = g.apply(kite.side_start(cr.side));
  const Vec2 b = g.apply(kite.side_end(cr.side));
  const Isometry g_next = g.then(Isometry::reflection_across(a, b));
  if (g_next.reflecting) return std::nullopt;
  if (std::abs(g_next.rotation_angle()) > kTolAngle) return std::nullopt;

  PeriodicOrbit orbit;
  orbit.start = kite.point_on_side(beam.base.side, (lo + hi) / 2.0);
  orbit.translation = g_next.apply(orbit.start) - orbit.start;
  orbit.period = orbit.translation.norm();
  orbit.closing_crossing = beam.crossings.size();
  return orbit;
}

PropagationOutcome propagate_beam(const Kite& kite, const BeamBase& base, double max_T,
                                  Beam* state, std::size_t max_steps) {
  if (!(max_T > 0.0)) throw std::domain_error("propagate_beam: max_T must be positive");
  Beam local;
  Beam& beam = state ? *state : local;
  beam = Beam{};
  beam.base = base;
  beam.u = unit_from_turns(base.direction);
  beam.n = Vec2(-beam.u.y(), beam.u.x());
  beam.origin = kite.point_on_side(base.side, (base.f0 + base.f1) / 2.0);

  const double half = base.eps / 2.0;
  std::optional<SplitEvent> pending;

  auto scan_copy_vertices = [&](const Isometry& g, std::size_t copy_index) {
    for (int vid = 0; vid < 4; ++vid) {
      const Vec2 v = g.apply(kite.vertices[static_cast<std::size_t>(vid)]);
      const Vec2 rel = v - beam.origin;
      const double axial = rel.dot(beam.u);
      const double perp = std::abs(rel.dot(beam.n));
      if (axial <= kTolVertex) continue;  // behind or on the base plane
      if (perp >= half) continue;         // outside the open strip
      if (!pending || axial < pending->T) {
        pending = SplitEvent{axial, v, perp, copy_index, vid};
      }
    }
  };

  Isometry g = Isometry::identity();
  auto push_frame = [&](int entry_side, double entry_t) {
    const Vec2 diag = g.apply(kite.vertices[2]) - g.apply(kite.vertices[0]);
    const double diag_turns = std::atan2(diag.y(), diag.x()) / two_pi_v<double>;
    beam.frames.push_back({g, entry_side,
                           CircleAngle::from_turns(diag_turns - base.direction.turns()),
                           entry_t});
  };
  push_frame(base.side, 0.0);
  scan_copy_vertices(g, 0);

  auto copies_within = [&](double T) {
    std::size_t c = 0;
    for (const auto& f : beam.frames) {
      if (f.entry_t < T) ++c;
    }
    return c;
  };

  auto split_outcome = [&](const SplitEvent& ev) {
    PropagationOutcome out;
    out.kind = PropagationOutcome::Kind::split;
    out.T = ev.T;
    out.split = ev;
    out.kite_count = copies_within(ev.T);
    beam.T = ev.T;
    return out;
  };

  // Copies entered later can still contribute vertex events up to one kite
  // diameter (= 1) behind their entry, so a pending event is final only
  // once the axis has advanced a full diameter past it.
  int entry = base.side;
  double t_cur = 0.0;
  for (std::size_t step = 0; step < max_steps; ++step) {
    // exit crossing of the axis through the current copy
    double best_t = std::numeric_limits<double>::infinity();
    int best_side = -1;
    Vec2 best_a = Vec2::Zero(), best_b = Vec2::Zero();
    for (int j = 0; j < 4; ++j) {
      if (j == entry) continue;
      const Vec2 a = g.apply(kite.side_start(j));
      const Vec2 b = g.apply(kite.side_end(j));
      const Vec2 v = b - a;
      const double denom = beam.u.x() * v.y() - beam.u.y() * v.x();
      if (std::abs(denom) < 1e-300) continue;
      const Vec2 w = a - beam.origin;
      const double t = (w.x() * v.y() - w.y() * v.x()) / denom;
      const double s = (w.x() * beam.u.y() - w.y() * beam.u.x()) / denom;
      if (t <= t_cur + 1e-15 || s < -1e-9 || s > 1.0 + 1e-9) continue;
      if (t < best_t) {
        best_t = t;
        best_side = j;
        best_a = a;
        best_b = b;
      }
    }
    if (best_side < 0) {
      throw std::runtime_error("propagate_beam: axis found no exit side");
    }

    if (pending && pending->T + 1.0 <= best_t) return split_outcome(*pending);

    if (best_t > max_T) {
      if (pending && pending->T <= max_T) return split_outcome(*pending);
      PropagationOutcome out;
      out.kind = PropagationOutcome::Kind::undecided;
      out.T = max_T;
      out.kite_count = copies_within(max_T);
      beam.T = max_T;
      return out;
    }

    const Vec2 hit = beam.origin + best_t * beam.u;
    if ((hit - best_a).norm() < kTolVertex || (hit - best_b).norm() < kTolVertex) {
      // the axis trajectory itself dies here; the earliest known event wins
      const Vec2 v = (hit - best_a).norm() < kTolVertex ? best_a : best_b;
      const Vec2 rel = v - beam.origin;
      const SplitEvent axis_event{rel.dot(beam.u), v, std::abs(rel.dot(beam.n)),
                                  beam.frames.size() - 1, -1};
      if (pending && pending->T < axis_event.T) return split_outcome(*pending);
      return split_outcome(axis_event);
    }

    const StripFootprint fp = strip_on_segment(best_a, best_b, beam.origin, beam.n, base.eps);
    beam.crossings.push_back({best_t, best_side, fp.lo, fp.hi});
    t_cur = best_t;
    beam.T = best_t;

    if (auto orbit = detect_periodic(kite, beam)) {
      // a vertex already known to obstruct the closed span still wins
      if (pending && pending->T <= best_t) return split_outcome(*pending);
      PropagationOutcome out;
      out.kind = PropagationOutcome::Kind::periodic;
      out.T = best_t;
      out.orbit = orbit;
      out.kite_count = copies_within(best_t);
      return out;
    }

    g = g.then(Isometry::reflection_across(best_a, best_b));
    if ((step + 1) % kRenormalizeEvery == 0) g.renormalize();
    entry = best_side;
    push_frame(best_side, best_t);
    scan_copy_vertices(g, beam.frames.size() - 1);
  }
  PropagationOutcome out;
  out.kind = PropagationOutcome::Kind::undecided;
  out.T = t_cur;
  out.kite_count = copies_within(t_cur);
  return out;
}

IntersectionCountReport kite_intersection_count(const Beam& beam, double c_constant) {
  IntersectionCountReport report;
  report.c_used = c_constant;
  for (const auto& f : beam.frames) {
    if (f.entry_t < beam.T) ++report.count;
  }
  report.bound = c_constant * beam.T / beam.base.eps;
  return report;
}

double estimate_C(const Kite& kite, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::domain_error("estimate_C: samples must be >= 1");
  const double theta_min = kite.min_interior_angle();
  const double analytic = 2.0 / std::sin(theta_min / 2.0);

  const double eps_ref = 0.01;
  SplitMix64 rng(seed);
  double empirical = 0.0;
  for (int i = 0; i < samples; ++i) {
    const int side = static_cast<int>(rng.uniform_index(4));
    const double frac = rng.uniform(0.05, 0.95);
    const Vec2 start = kite.point_on_side(side, frac);
    // inward direction, away from grazing
    const Vec2 n_in = kite.inward_normal(side);
    const Vec2 tang(-n_in.y(), n_in.x());
    const double ang = rng.uniform(0.1, std::numbers::pi - 0.1);
    const Vec2 u = std::cos(ang) * tang + std::sin(ang) * n_in;

    // chord through the kite
    double exit_t = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 4; ++j) {
      if (j == side) continue;
      const Vec2 a = kite.side_start(j);
      const Vec2 b = kite.side_end(j);
      const Vec2 v = b - a;
      const double denom = u.x() * v.y() - u.y() * v.x();
      if (std::abs(denom) < 1e-300) continue;
      const Vec2 w = a - start;
      const double t = (w.x() * v.y() - w.y() * v.x()) / denom;
      const double s = (w.x() * u.y() - w.y() * u.x()) / denom;
      if (t > 1e-12 && s >= -1e-9 && s <= 1.0 + 1e-9) exit_t = std::min(exit_t, t);
    }
    if (!std::isfinite(exit_t)) continue;
    const Vec2 end = start + exit_t * u;

    // clearance of the chord from the vertices
    double clearance = std::numeric_limits<double>::infinity();
    for (const Vec2& v : kite.vertices) {
      const Vec2 d = end - start;
      const double len2 = d.squaredNorm();
      const double proj = std::clamp((v - start).dot(d) / len2, 0.0, 1.0);
      clearance = std::min(clearance, (start + proj * d - v).norm());
    }
    if (clearance >= eps_ref) empirical = std::max(empirical, eps_ref / exit_t);
  }
  return 1.1 * std::max(analytic, empirical);
}

}  // namespace kitebeam
