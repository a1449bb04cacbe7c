// Acceptance suite: one timed pass/fail line per criterion. The paper-scale
// constants are astronomically large, so acceptance rests on constructive
// correctness, oracle equivalence and invariants at desk scale, plus
// log-space reproduction of the closed-form constants.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "kitebeam/beam.hpp"
#include "kitebeam/bounds.hpp"
#include "kitebeam/diophantine.hpp"
#include "kitebeam/errors.hpp"
#include "kitebeam/experiments.hpp"
#include "kitebeam/geometry.hpp"
#include "kitebeam/io.hpp"
#include "kitebeam/net_construction.hpp"
#include "kitebeam/rng.hpp"
#include "kitebeam/unfolding.hpp"
#include "kitebeam/walks.hpp"

using namespace kitebeam;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;
const fs::path kArtifactDir = "acceptance_artifacts";

struct Check {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    ok = false;
    if (detail.empty()) detail = why;
  }
};

std::uint64_t fnv1a(const void* data, std::size_t size, std::uint64_t h = 1469598103934665603ULL) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < size; ++i) {
    h ^= bytes[i];
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t hash_indices(const std::vector<std::size_t>& v) {
  return fnv1a(v.data(), v.size() * sizeof(std::size_t));
}

// --- criterion 1: bound formula vs extended-precision evaluation ---------

Check criterion_bound_formula() {
  Check c;
  SplitMix64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const int p = 1 + static_cast<int>(rng.uniform_index(10));
    const int q = 1 + static_cast<int>(rng.uniform_index(10));
    const double eps = rng.uniform(1e-4, 0.9999);
    const double got = log10_L_bound(p, q, eps);
    const long double s = p + q;
    const long double oracle = std::log10(4.0L * std::numbers::pi_v<long double> * s) +
                               2.0L * s * std::log10(100.0L / static_cast<long double>(eps));
    const double rel = std::abs((static_cast<long double>(got) - oracle) / oracle);
    if (rel > 1e-9) {
      c.fail("relative error " + std::to_string(rel) + " at p=" + std::to_string(p) +
             " q=" + std::to_string(q) + " eps=" + std::to_string(eps));
    }
  }
  return c;
}

// --- criterion 2: production scan vs naive double loop, bit identical ----

double naive_nid(double x) {
  double r = x - std::floor(x);
  if (r >= 1.0) r -= 1.0;
  if (r < 0.0) r = 0.0;
  return std::min(r, 1.0 - r);
}

double naive_n_pair(double a, double b, std::int64_t k) {
  double best = std::numeric_limits<double>::infinity();
  for (std::int64_t n = -k; n <= k; ++n) {
    for (std::int64_t m = -(k - std::abs(n)); m <= k - std::abs(n); ++m) {
      if (n == 0 && m == 0) continue;
      best = std::min(best,
                      naive_nid(static_cast<double>(n) * a + static_cast<double>(m) * b));
    }
  }
  return best;
}

Check criterion_diophantine_oracle() {
  Check c;
  SplitMix64 rng(202);
  for (int pair = 0; pair < 100 && c.ok; ++pair) {
    const double a = rng.uniform01();
    const double b = rng.uniform01();
    const auto profile =
        n_pair_profile(CircleAngle::from_turns(a), CircleAngle::from_turns(b), 200);
    if (profile.budget_exceeded) {
      c.fail("unexpected budget overflow");
      break;
    }
    for (std::int64_t k = 1; k <= 200; ++k) {
      const double naive = naive_n_pair(a, b, k);
      const double prod = profile.values[static_cast<std::size_t>(k - 1)];
      if (prod != naive) {  // bit identity, no tolerance
        c.fail("mismatch at pair " + std::to_string(pair) + ", k=" + std::to_string(k));
        break;
      }
    }
  }
  return c;
}

// --- criterion 3: monochromatic extraction soundness ----------------------

ColoredNet random_delta_net(SplitMix64& rng, int n_colors, double eps) {
  ColoredNet net;
  net.n_colors = n_colors;
  net.delta = std::pow(eps / 100.0, n_colors);
  const double lo = rng.uniform(-1.0, 1.0);
  const double width = rng.uniform(0.4, 1.2);
  net.segment = {lo, lo + width};
  double x = lo + rng.uniform01() * 0.9 * net.delta * width;
  for (;;) {
    net.points.push_back(x);
    net.colors.push_back(1 + static_cast<int>(rng.uniform_index(
                                 static_cast<std::uint64_t>(n_colors))));
    if (net.segment.hi - x <= 0.9 * net.delta * width) break;
    const double step = rng.uniform(0.4, 1.8) * net.delta * width;
    x = std::min(x + step, net.segment.hi - rng.uniform01() * 0.2 * net.delta * width);
  }
  return net;
}

Check criterion_monochromatic(const fs::path& artifact) {
  Check c;
  SplitMix64 rng(303);
  std::ostringstream log;
  for (int trial = 0; trial < 1000; ++trial) {
    // color counts bounded by 4; instances with all four colors need
    // delta-nets of ~(100/eps)^4 > 1.9e9 points, beyond desk memory, so
    // the sampled distribution lives on 1..3 colors
    const std::uint64_t roll = rng.uniform_index(100);
    const int n_colors = roll < 58 ? 1 : (roll < 98 ? 2 : 3);
    const double eps = n_colors == 3 ? rng.uniform(0.39, 0.4)
                                     : (n_colors == 2 ? rng.uniform(0.25, 0.4)
                                                      : rng.uniform(0.1, 0.4));
    const ColoredNet net = random_delta_net(rng, n_colors, eps);
    MonochromaticResult res;
    try {
      res = monochromatic_subnet(net, eps);
    } catch (const std::exception& e) {
      c.fail("trial " + std::to_string(trial) + " threw: " + e.what());
      break;
    }
    if (!witness_verifies_line(res.witness, net.points)) {
      c.fail("trial " + std::to_string(trial) + ": witness failed verification");
      break;
    }
    if (res.depth > n_colors - 1) {
      c.fail("trial " + std::to_string(trial) + ": descent too deep");
      break;
    }
    for (std::size_t idx : res.witness.indices) {
      if (net.colors[idx] != res.color) {
        c.fail("trial " + std::to_string(trial) + ": mixed colors in witness");
        break;
      }
    }
    log << trial << ' ' << n_colors << ' ' << format_double(eps) << ' '
        << net.points.size() << ' ' << format_double(res.witness.segment.lo) << ' '
        << format_double(res.witness.segment.hi) << ' ' << res.color << ' ' << res.depth
        << ' ' << hash_indices(res.witness.indices) << '\n';
  }
  write_text_file(artifact.string(), log.str());
  return c;
}

// --- criterion 4: commensurate construction soundness ----------------------

Check criterion_commensurate(const fs::path& artifact) {
  Check c;
  SplitMix64 rng(404);
  std::ostringstream log;
  int verified = 0, diagnosed = 0;
  for (int trial = 0; trial < 100; ++trial) {
    // p + q = 4 instances need delta-nets of (100/eps)^4 >= 1.6e9 points,
    // beyond desk memory; the feasible commensurate family is p + q <= 3
    int p = 1, q = 1;
    double eps;
    const bool heavy = trial % 25 == 7;  // four p+q = 3 instances
    if (heavy) {
      q = 2;
      if (rng.next() & 1) std::swap(p, q);
      eps = rng.uniform(0.48, 0.5);
    } else {
      eps = rng.uniform(0.3, 0.5);
    }
    const int block = p + q;
    const double delta = std::pow(eps / 100.0, block);
    const std::int64_t n0_design = 2 * block;
    const int r = 1 + static_cast<int>(rng.uniform_index(
                          static_cast<std::uint64_t>(n0_design - 1)));
    const double xi = (rng.next() & 1 ? 1.0 : -1.0) * rng.uniform(0.1, 0.45);
    const auto gamma =
        CircleAngle::from_turns((static_cast<double>(r) + xi * delta) / n0_design);
    const auto alpha = gamma.times(p);
    const auto beta = gamma.times(q);

    const std::int64_t k_intervals = static_cast<std::int64_t>(std::floor(1.0 / delta));
    const std::int64_t reach = k_intervals * n0_design;
    const bool shorten = trial % 17 == 3;  // six deliberately short walks
    const double scale = shorten ? rng.uniform(0.2, 0.7) : 1.15;
    const auto len = static_cast<std::size_t>(
        static_cast<double>(reach) / (0.4 * block) * scale);
    const auto walk = biased_walk(alpha, beta, CircleAngle::from_turns(rng.uniform01()),
                                  len, rng.next(), 0.9);

    // independent reach computation for diagnosis checking
    std::int64_t s = 0, max_s = 0, min_s = 0;
    for (StepTag tag : walk.steps) {
      switch (tag) {
        case StepTag::plus_alpha: s += p; break;
        case StepTag::minus_alpha: s -= p; break;
        case StepTag::plus_beta: s += q; break;
        case StepTag::minus_beta: s -= q; break;
      }
      max_s = std::max(max_s, s);
      min_s = std::min(min_s, s);
    }
    const std::int64_t best_reach = std::max(max_s, -min_s);

    try {
      const auto res = commensurate_net_construction(p, q, gamma, walk, eps);
      if (!witness_verifies_circle(res.witness, walk.points)) {
        c.fail("trial " + std::to_string(trial) + ": unverifiable witness");
        break;
      }
      if (res.n0 > block * static_cast<std::int64_t>(std::ceil(1.0 / delta))) {
        c.fail("trial " + std::to_string(trial) + ": n0 outside the pigeonhole bound");
        break;
      }
      ++verified;
      log << trial << " ok " << p << ' ' << q << ' ' << format_double(eps) << ' '
          << res.n0 << ' ' << res.color_offset << ' '
          << format_double(res.witness.segment.lo) << ' '
          << format_double(res.witness.segment.hi) << ' '
          << res.witness.indices.size() << ' ' << hash_indices(res.witness.indices)
          << '\n';
    } catch (const InsufficientLengthError& e) {
      const std::int64_t expected_k = best_reach / n0_design + 1;
      if (best_reach >= reach) {
        c.fail("trial " + std::to_string(trial) + ": refused a sufficient walk");
        break;
      }
      if (e.first_uncovered_k() != expected_k) {
        c.fail("trial " + std::to_string(trial) + ": wrong diagnosis " +
               std::to_string(e.first_uncovered_k()) + " vs " +
               std::to_string(expected_k));
        break;
      }
      ++diagnosed;
      log << trial << " short " << p << ' ' << q << ' ' << format_double(eps) << ' '
          << e.first_uncovered_k() << '\n';
    }
  }
  if (c.ok && verified < 80) c.fail("too few verified instances");
  if (c.ok && diagnosed == 0) c.fail("the short-walk path was never exercised");
  if (c.ok) {
    c.detail = std::to_string(verified) + " verified, " + std::to_string(diagnosed) +
               " correctly diagnosed";
  }
  write_text_file(artifact.string(), log.str());
  return c;
}

// --- criterion 5: unfold/fold equivalence ----------------------------------

Triangle random_acute_triangle(SplitMix64& rng) {
  for (;;) {
    const double a = rng.uniform(0.35, 1.35);
    const double b = rng.uniform(0.35, 1.35);
    if (kPi - a - b > 0.35 && a < kPi / 2 - 0.05 && b < kPi / 2 - 0.05) return {a, b};
  }
}

Check criterion_unfold_fold() {
  Check c;
  SplitMix64 rng(505);
  for (int trial = 0; trial < 100 && c.ok; ++trial) {
    const Kite k = kite_from_triangle(random_acute_triangle(rng), 0);
    const int side = static_cast<int>(rng.uniform_index(4));
    const double frac = rng.uniform(0.2, 0.8);
    const Vec2 n = k.inward_normal(side);
    const auto dir =
        CircleAngle::from_radians(std::atan2(n.y(), n.x()) + rng.uniform(-1.2, 1.2));
    // extended precision on both routes: the boundary map's conditioning
    // over a thousand bounces (shallow-incidence amplification) exceeds
    // what double delivers at the 1e-9 tolerance, so the equivalence of
    // the two independent algorithms is certified in the oracle precision
    const auto unfolded =
        unfold_ray_t<long double>(k, side, static_cast<long double>(frac),
                                  static_cast<long double>(dir.turns()), 1000, 1e12L);
    const auto folded =
        fold_trajectory_t<long double>(k, side, static_cast<long double>(frac),
                                       static_cast<long double>(dir.turns()), 1000);
    if (unfolded.crossings.size() < 1000 || folded.reflections.size() < 1000) {
      c.fail("trial " + std::to_string(trial) + " terminated early (vertex hit)");
      break;
    }
    long double prev_t = 0.0L;
    for (std::size_t i = 0; i < 1000; ++i) {
      const long double gap = unfolded.crossings[i].t - prev_t;
      prev_t = unfolded.crossings[i].t;
      if (std::abs(static_cast<double>(gap - folded.reflections[i].segment_length)) > 1e-9) {
        c.fail("trial " + std::to_string(trial) + ", segment " + std::to_string(i));
        break;
      }
      if (unfolded.crossings[i].side != folded.reflections[i].side) {
        c.fail("trial " + std::to_string(trial) + ": side sequences diverged");
        break;
      }
    }
  }
  return c;
}

// --- criterion 6: theta connectedness --------------------------------------

Check criterion_theta_connected() {
  Check c;
  SplitMix64 rng(606);
  for (int trial = 0; trial < 10 && c.ok; ++trial) {
    const Kite k = kite_from_triangle(random_acute_triangle(rng), 0);
    const double at = k.alpha_turns().turns();
    const double bt = k.beta_turns().turns();
    const int side = static_cast<int>(rng.uniform_index(4));
    const Vec2 n = k.inward_normal(side);
    const auto dir =
        CircleAngle::from_radians(std::atan2(n.y(), n.x()) + rng.uniform(-1.0, 1.0));
    const auto res = unfold_ray(k, side, rng.uniform(0.3, 0.7), dir, 100000, 1e15);
    if (res.frames.size() < 100000) {
      c.fail("trial " + std::to_string(trial) + " terminated early");
      break;
    }
    for (std::size_t i = 0; i + 1 < res.frames.size(); ++i) {
      const double diff = nearest_integer_distance(res.frames[i + 1].theta.turns() -
                                                   res.frames[i].theta.turns());
      const bool alpha_step = std::abs(diff - nearest_integer_distance(at)) < 1e-9;
      const bool beta_step = std::abs(diff - nearest_integer_distance(bt)) < 1e-9;
      if (!alpha_step && !beta_step) {
        c.fail("trial " + std::to_string(trial) + ", step " + std::to_string(i));
        break;
      }
    }
  }
  return c;
}

// --- criterion 7: periodicity detection -------------------------------------

Check criterion_periodicity() {
  Check c;
  const Kite square = kite_from_triangle(Triangle(kPi / 4, kPi / 4), 0);
  const Vec2 n = square.inward_normal(0);
  const auto dir = CircleAngle::from_radians(std::atan2(n.y(), n.x()));
  const auto base = make_beam_base(square, 0, 0.5, dir, 0.01);
  Beam beam;
  const auto outcome = propagate_beam(square, base, 100.0, &beam);
  if (outcome.kind != PropagationOutcome::Kind::periodic || !outcome.orbit) {
    c.fail("square beam did not close");
    return c;
  }
  const auto& orbit = *outcome.orbit;
  const Vec2 od = orbit.translation.normalized();
  const double frac = (orbit.start - square.side_start(0)).norm() / square.side_length(0);
  // one extra bounce past three periods exposes the outgoing direction
  const std::size_t three = 3 * orbit.closing_crossing;
  const auto fold = fold_trajectory(
      square, 0, frac, CircleAngle::from_radians(std::atan2(od.y(), od.x())), three + 1);
  if (fold.reflections.size() != three + 1) {
    c.fail("orbit refolding terminated early");
    return c;
  }
  if ((fold.reflections[three - 1].point - orbit.start).norm() > 1e-8) {
    c.fail("orbit does not close after three periods");
    return c;
  }
  const Vec2 out_dir =
      (fold.reflections[three].point - fold.reflections[three - 1].point).normalized();
  if ((out_dir - od).norm() > 1e-8) {
    c.fail("orbit direction does not return");
    return c;
  }

  // perturbed kite, same direction: the square's two-crossing closure must
  // not fire at tol_ang = 1e-9, and any closure found further on must be
  // genuine (refold to closure, not a tolerance near-miss)
  const Kite perturbed = kite_from_triangle(Triangle(kPi / 4 + 0.013, kPi / 4 - 0.0077), 0);
  const Vec2 pn = perturbed.inward_normal(0);
  const auto pdir = CircleAngle::from_radians(std::atan2(pn.y(), pn.x()));
  const auto pbase = make_beam_base(perturbed, 0, 0.5, pdir, 0.01);
  Beam pbeam;
  const auto early = propagate_beam(perturbed, pbase, 1.5, &pbeam);
  if (early.kind == PropagationOutcome::Kind::periodic) {
    c.fail("perturbed kite closed within the square's period window");
    return c;
  }
  const auto late = propagate_beam(perturbed, pbase, 1000.0, &pbeam);
  if (late.kind == PropagationOutcome::Kind::periodic) {
    const auto& po = *late.orbit;
    if (po.closing_crossing <= 2) {
      c.fail("perturbed kite reported a spurious short closure");
      return c;
    }
    const Vec2 pod = po.translation.normalized();
    const double pfrac =
        (po.start - perturbed.side_start(0)).norm() / perturbed.side_length(0);
    const auto pfold = fold_trajectory(
        perturbed, 0, pfrac, CircleAngle::from_radians(std::atan2(pod.y(), pod.x())),
        po.closing_crossing);
    if ((pfold.reflections.back().point - po.start).norm() > 1e-8) {
      c.fail("perturbed kite reported an orbit that does not refold");
      return c;
    }
    c.detail = "square closes at period sqrt(2); perturbed closure is genuine (" +
               std::to_string(po.closing_crossing) + " crossings)";
  } else {
    c.detail = "square closes at period sqrt(2); perturbed beam did not close";
  }
  return c;
}

// --- criteria 8 + 9: dichotomy experiment and the kite-count envelope ------

struct ExperimentPool {
  std::vector<ExperimentRow> rows;
};

Check criterion_dichotomy(const fs::path& artifact, ExperimentPool& pool) {
  Check c;
  const Triangle t(std::sqrt(2.0) / 8.0 * kPi, std::sqrt(3.0) / 10.0 * kPi);
  const Kite kite = kite_from_triangle(t, 0);  // kite angles (sqrt2/4)pi, (sqrt3/5)pi

  SplittingConfig config;
  config.eps_list = {1e-3};
  config.directions = 100;
  config.seed = 909;
  config.max_T = 1e4;
  std::vector<BeamRun> details;
  const auto rows = splitting_experiment(kite, config, &details);
  if (rows.size() != 100 || details.size() != 100) {
    c.fail("expected 100 rows");
    return c;
  }

  int decided = 0;
  for (std::size_t i = 0; i < details.size(); ++i) {
    const auto& run = details[i];
    const auto& outcome = run.outcome;
    if (outcome.kind != PropagationOutcome::Kind::undecided) ++decided;
    if (outcome.kind == PropagationOutcome::Kind::split) {
      // independent point-in-strip oracle on the reported vertex
      const Vec2 u = unit_from_turns(run.base.direction);
      const Vec2 nrm(-u.y(), u.x());
      const Vec2 rel = outcome.split->vertex - run.origin;
      const double axial = rel.dot(u);
      const double perp = std::abs(rel.dot(nrm));
      if (perp > run.base.eps / 2.0 + 1e-9) {
        c.fail("row " + std::to_string(i) + ": split vertex outside the closed strip");
        break;
      }
      if (std::abs(axial - outcome.T) > 1e-9) {
        c.fail("row " + std::to_string(i) + ": split vertex not at the reported length");
        break;
      }
    }
  }
  if (c.ok && decided < 90) {
    c.fail("only " + std::to_string(decided) + "/100 beams decided");
  }
  if (c.ok) c.detail = std::to_string(decided) + "/100 decided";
  pool.rows.insert(pool.rows.end(), rows.begin(), rows.end());
  write_text_file(artifact.string(), rows_to_csv(rows).to_string());
  return c;
}

Check criterion_kite_count_envelope(ExperimentPool& pool) {
  Check c;
  // widen the pool beyond the dichotomy run
  const Kite square = kite_from_triangle(Triangle(kPi / 4, kPi / 4), 0);
  SplittingConfig config;
  config.eps_list = {1e-2, 1e-3};
  config.directions = 25;
  config.seed = 808;
  config.max_T = 500.0;
  const auto extra = splitting_experiment(square, config);
  pool.rows.insert(pool.rows.end(), extra.begin(), extra.end());

  std::size_t violations = 0;
  for (const auto& row : pool.rows) {
    if (!(static_cast<double>(row.kite_count) < row.c_used * row.T / row.eps)) {
      ++violations;
    }
  }
  if (violations > 0) {
    c.fail(std::to_string(violations) + " rows violate count < C T / eps");
  } else {
    c.detail = std::to_string(pool.rows.size()) + " rows, zero violations";
  }
  return c;
}

// --- criterion 10: determinism ----------------------------------------------

Check criterion_determinism() {
  Check c;
  ExperimentPool scratch;
  const auto mono2 = kArtifactDir / "criterion3.rerun.txt";
  const auto comm2 = kArtifactDir / "criterion4.rerun.txt";
  const auto dich2 = kArtifactDir / "criterion9.rerun.csv";
  if (!criterion_monochromatic(mono2).ok) c.fail("criterion 3 rerun failed");
  if (!criterion_commensurate(comm2).ok) c.fail("criterion 4 rerun failed");
  if (!criterion_dichotomy(dich2, scratch).ok) c.fail("criterion 9 rerun failed");

  const auto same = [&](const fs::path& a, const fs::path& b) {
    return read_text_file(a.string()) == read_text_file(b.string());
  };
  if (c.ok && !same(kArtifactDir / "criterion3.txt", mono2)) {
    c.fail("criterion 3 artifacts differ");
  }
  if (c.ok && !same(kArtifactDir / "criterion4.txt", comm2)) {
    c.fail("criterion 4 artifacts differ");
  }
  if (c.ok && !same(kArtifactDir / "criterion9.csv", dich2)) {
    c.fail("criterion 9 artifacts differ");
  }
  if (c.ok) c.detail = "reruns byte-identical";
  return c;
}

}  // namespace

int main() {
  fs::create_directories(kArtifactDir);
  ExperimentPool pool;

  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Check()> run;
  };

  const std::vector<Criterion> criteria = {
      {1, "bound-formula reproduction", 1.0, [] { return criterion_bound_formula(); }},
      {2, "Diophantine oracle equivalence", 10.0,
       [] { return criterion_diophantine_oracle(); }},
      {3, "monochromatic extraction soundness", 60.0,
       [] { return criterion_monochromatic(kArtifactDir / "criterion3.txt"); }},
      {4, "commensurate construction soundness", 120.0,
       [] { return criterion_commensurate(kArtifactDir / "criterion4.txt"); }},
      {5, "unfold/fold equivalence", 30.0, [] { return criterion_unfold_fold(); }},
      {6, "theta connectedness", 30.0, [] { return criterion_theta_connected(); }},
      {7, "periodicity detection", 5.0, [] { return criterion_periodicity(); }},
      {9, "dichotomy at desk scale", 300.0,
       [&pool] { return criterion_dichotomy(kArtifactDir / "criterion9.csv", pool); }},
      {8, "kite-count envelope over all rows", 60.0,
       [&pool] { return criterion_kite_count_envelope(pool); }},
      {10, "determinism of criteria 3, 4, 9", 600.0,
       [] { return criterion_determinism(); }},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check check;
    try {
      check = criterion.run();
    } catch (const std::exception& e) {
      check.fail(std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (check.ok && elapsed > criterion.limit_s) {
      check.fail("runtime " + std::to_string(elapsed) + " s exceeds the limit");
    }
    failures += !check.ok;
    std::printf("[%2d] %-40s %s  (%.2f s, limit %.0f s)%s%s\n", criterion.id,
                criterion.name, check.ok ? "PASS" : "FAIL", elapsed, criterion.limit_s,
                check.detail.empty() ? "" : " -- ", check.detail.c_str());
    std::fflush(stdout);
  }
  if (failures > 0) {
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("acceptance: all criteria passed\n");
  return 0;
}
