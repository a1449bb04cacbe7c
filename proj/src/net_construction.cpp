#include "kitebeam/net_construction.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "kitebeam/errors.hpp"
#include "kitebeam/rng.hpp"
#include "kitebeam/walks.hpp"

namespace kitebeam {

std::int64_t find_pigeonhole_multiple(CircleAngle gamma, int block, double delta,
                                      std::uint64_t max_multiples) {
  if (block < 1) throw std::domain_error("find_pigeonhole_multiple: block must be >= 1");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::domain_error("find_pigeonhole_multiple: delta must lie in (0, 1)");
  }
  const double inv_delta = 1.0 / delta;
  if (inv_delta > static_cast<double>(max_multiples)) {
    throw BudgetError("find_pigeonhole_multiple: 1/delta exceeds the scan budget");
  }
  const std::int64_t m_max = static_cast<std::int64_t>(std::ceil(inv_delta)) + 1;
  const double g = gamma.turns();
  for (std::int64_t m = 2; m <= m_max; ++m) {
    const std::int64_t n0 = m * block;
    if (nearest_integer_distance(static_cast<double>(n0) * g) < delta) {
      if (n0 > block * (m_max - 1)) break;  // outside the pigeonhole bound
      return n0;
    }
  }
  throw std::domain_error(
      "find_pigeonhole_multiple: no multiple within the pigeonhole bound "
      "(gamma is too close to a low-denominator rational for this delta)");
}

namespace {

int shadow_step(StepTag tag, int p, int q) {
  switch (tag) {
    case StepTag::plus_alpha: return p;
    case StepTag::minus_alpha: return -p;
    case StepTag::plus_beta: return q;
    case StepTag::minus_beta: return -q;
  }
  return 0;
}

}  // namespace

CommensurateResult commensurate_net_construction(int p, int q, CircleAngle gamma,
                                                 const ConnectedSequence& seq, double eps,
                                                 ScanBudget budget) {
  if (p < 1 || q < 1) {
    throw std::domain_error("commensurate_net_construction: p, q must be >= 1");
  }
  if (!(eps > 0.0 && eps <= 0.5)) {
    throw std::domain_error("commensurate_net_construction: eps must lie in (0, 1/2]");
  }
  if (seq.points.size() < 2) {
    throw std::domain_error("commensurate_net_construction: sequence too short");
  }
  const double tol_gen = 1e-9;
  if (circle_distance(seq.alpha, gamma.times(p)) > tol_gen ||
      circle_distance(seq.beta, gamma.times(q)) > tol_gen) {
    throw std::domain_error(
        "commensurate_net_construction: sequence generators are not p*gamma, q*gamma");
  }

  const int block = p + q;
  const double delta = std::pow(eps / 100.0, block);
  const std::int64_t n0 = find_pigeonhole_multiple(gamma, block, delta,
                                                   budget.max_candidates);
  const std::int64_t k_intervals = static_cast<std::int64_t>(std::floor(1.0 / delta));

  // Integer shadow extremes decide which side the construction runs on.
  std::int64_t s = 0, max_s = 0, min_s = 0;
  for (StepTag tag : seq.steps) {
    s += shadow_step(tag, p, q);
    max_s = std::max(max_s, s);
    min_s = std::min(min_s, s);
  }
  const std::int64_t reach_needed = k_intervals * n0;
  bool mirrored = false;
  if (max_s >= reach_needed) {
    mirrored = false;
  } else if (-min_s >= reach_needed) {
    mirrored = true;
  } else {
    const std::int64_t best = std::max(max_s, -min_s);
    const std::int64_t first_uncovered = best / n0 + 1;
    throw InsufficientLengthError(
        "commensurate_net_construction: walk shadow reaches " + std::to_string(best) +
            " but interval " + std::to_string(first_uncovered) + " of " +
            std::to_string(k_intervals) + " starts at " +
            std::to_string(first_uncovered * n0),
        first_uncovered);
  }

  const double gamma_eff = mirrored ? wrap_unit(-gamma.turns()) : gamma.turns();
  const double eta = signed_unit(static_cast<double>(n0) * gamma_eff);
  if (eta == 0.0) {
    throw std::domain_error(
        "commensurate_net_construction: n0 * gamma is exactly integral");
  }

  // First walk point inside each shadow interval [k*n0, k*n0 + p+q-1].
  constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> first_index(static_cast<std::size_t>(k_intervals) + 1,
                                         kUnassigned);
  std::vector<std::uint8_t> offsets(static_cast<std::size_t>(k_intervals) + 1, 0);
  const std::int64_t sign = mirrored ? -1 : 1;
  s = 0;
  for (std::size_t i = 0; i < seq.points.size(); ++i) {
    if (i > 0) s += shadow_step(seq.steps[i - 1], p, q);
    const std::int64_t se = sign * s;
    if (se >= n0) {
      const std::int64_t k = se / n0;
      const std::int64_t offset = se - k * n0;
      if (k <= k_intervals && offset <= block - 1) {
        auto& slot = first_index[static_cast<std::size_t>(k)];
        if (slot == kUnassigned) {
          slot = static_cast<std::uint32_t>(i);
          offsets[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(offset);
        }
      }
    }
  }
  for (std::int64_t k = 1; k <= k_intervals; ++k) {
    if (first_index[static_cast<std::size_t>(k)] == kUnassigned) {
      throw InsufficientLengthError(
          "commensurate_net_construction: no walk point in shadow interval " +
              std::to_string(k),
          k);
    }
  }

  // Arithmetic-progression net at u_k = k*eta, ascending.
  ColoredNet net;
  net.n_colors = block;
  const std::size_t count = static_cast<std::size_t>(k_intervals);
  net.points.resize(count);
  net.colors.resize(count);
  std::vector<std::int64_t> k_of_pos(count);
  for (std::size_t pos = 0; pos < count; ++pos) {
    const std::int64_t k =
        eta > 0 ? static_cast<std::int64_t>(pos) + 1 : k_intervals - static_cast<std::int64_t>(pos);
    k_of_pos[pos] = k;
    net.points[pos] = static_cast<double>(k) * eta;
    net.colors[pos] = static_cast<int>(offsets[static_cast<std::size_t>(k)]) + 1;
  }
  net.segment = {net.points.front(), net.points.back()};
  // Tightest delta the progression actually satisfies (floating-exact by
  // construction, and well under (eps/100)^{p+q}).
  {
    const double w = net.segment.width();
    double worst = 0.0;
    for (std::size_t pos = 0; pos + 1 < count; ++pos) {
      worst = std::max(worst, (net.points[pos + 1] - net.points[pos]) / w / 2.0);
    }
    // headroom for the predicate's own rounding; still far below delta
    net.delta = std::max(worst * (1.0 + 1e-9), 1e-300);
    const double delta_required = std::pow(eps / 100.0, block);
    if (net.delta > delta_required) {
      throw std::domain_error(
          "commensurate_net_construction: progression is coarser than required");
    }
  }

  MonochromaticResult mono = monochromatic_subnet(net, eps);
  const int t_shift = mono.color - 1;

  // Shift back onto walk points: net position k with color t corresponds
  // to the walk point whose shadow is k*n0 + t.
  CommensurateResult result;
  result.color_offset = t_shift;
  result.n0 = n0;
  result.delta = delta;
  result.k_intervals = k_intervals;
  result.mirrored = mirrored;
  result.witness.eps = eps;
  const double x0 = seq.points.front().turns();
  const double shift = static_cast<double>(t_shift) * gamma_eff;
  result.witness.indices.reserve(mono.witness.indices.size());
  for (std::size_t pos : mono.witness.indices) {
    result.witness.indices.push_back(first_index[static_cast<std::size_t>(k_of_pos[pos])]);
  }
  // The witness segment is the hull of the actual walk points, which sit
  // within the walk's accumulated rounding of the ideal positions. Unroll
  // against a reference just below the ideal start.
  const double ref = wrap_unit(x0 + mono.witness.segment.lo + shift - 1e-6);
  double lo_act = std::numeric_limits<double>::infinity();
  double hi_act = -std::numeric_limits<double>::infinity();
  for (std::size_t idx : result.witness.indices) {
    const double off = wrap_unit(seq.points[idx].turns() - ref);
    lo_act = std::min(lo_act, off);
    hi_act = std::max(hi_act, off);
  }
  result.witness.segment.lo = wrap_unit(ref + lo_act);
  result.witness.segment.hi = result.witness.segment.lo + (hi_act - lo_act);

  if (!witness_verifies_circle(result.witness, seq.points)) {
    throw std::logic_error(
        "commensurate_net_construction: constructed witness failed verification");
  }
  return result;
}

namespace {

// Cyclic single-linkage scan of the first m points. Clusters are
// contiguous arcs of the sorted order; merging gaps in ascending order
// enumerates every candidate hull. Returns the best qualifying witness
// (widest hull, then smallest arc start), or nothing.
struct ArcScanner {
  const std::vector<double>& sorted;        // m sorted circle values
  const std::vector<std::uint32_t>& order;  // original indices, same order
  double eps;
  double min_width;

  struct Cluster {
    std::uint32_t start;  // sorted index of the arc's first point
    std::uint32_t end;    // sorted index of the arc's last point
    double width;
    std::uint32_t size;
  };

  std::vector<std::uint32_t> parent;
  std::vector<Cluster> info;

  std::uint32_t find(std::uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  // Extracts the arc's points unrolled from its start; returns segment.
  Segment1D arc_points(const Cluster& c, std::vector<double>* out) const {
    const std::size_t m = sorted.size();
    out->clear();
    const double base = sorted[c.start];
    std::size_t idx = c.start;
    for (std::uint32_t step = 0; step < c.size; ++step) {
      double v = sorted[idx];
      if (idx < c.start) v += 1.0;  // wrapped past the seam
      out->push_back(v);
      idx = (idx + 1) % m;
    }
    return {base, base + c.width};
  }

  std::optional<IntervalNetWitness> best_witness(bool stop_at_first) {
    const std::size_t m = sorted.size();
    if (m < 2) return std::nullopt;
    parent.resize(m);
    info.resize(m);
    for (std::uint32_t i = 0; i < m; ++i) {
      parent[i] = i;
      info[i] = {i, i, 0.0, 1};
    }
    // gap i sits between sorted points i and (i+1) mod m
    std::vector<std::uint32_t> gap_order(m);
    std::vector<double> gaps(m);
    for (std::uint32_t i = 0; i < m; ++i) {
      const double next = i + 1 < m ? sorted[i + 1] : sorted[0] + 1.0;
      gaps[i] = next - sorted[i];
      gap_order[i] = i;
    }
    std::sort(gap_order.begin(), gap_order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return gaps[a] != gaps[b] ? gaps[a] < gaps[b] : a < b;
    });

    std::optional<IntervalNetWitness> best;
    std::vector<double> scratch;
    for (std::uint32_t gi : gap_order) {
      const std::uint32_t left = find(gi);
      const std::uint32_t right = find((gi + 1) % m);
      if (left == right) continue;  // would close the full circle
      Cluster merged;
      merged.start = info[left].start;
      merged.end = info[right].end;
      merged.width = info[left].width + gaps[gi] + info[right].width;
      merged.size = info[left].size + info[right].size;
      parent[right] = left;
      info[left] = merged;

      if (merged.width + 1e-18 < min_width) continue;
      if (gaps[gi] > 2.0 * eps * merged.width) continue;  // cheap reject
      const Segment1D seg = arc_points(merged, &scratch);
      if (merged.width < min_width) continue;
      if (!is_relative_eps_net(scratch, seg, eps)) continue;

      IntervalNetWitness w;
      w.segment = {wrap_unit(seg.lo), 0.0};
      w.segment.hi = w.segment.lo + merged.width;
      w.eps = eps;
      std::size_t idx = merged.start;
      for (std::uint32_t step = 0; step < merged.size; ++step) {
        w.indices.push_back(order[idx]);
        idx = (idx + 1) % m;
      }
      if (stop_at_first) return w;
      if (!best || merged.width > best->segment.width() ||
          (merged.width == best->segment.width() && w.segment.lo < best->segment.lo)) {
        best = std::move(w);
      }
    }
    return best;
  }
};

std::optional<IntervalNetWitness> scan_prefix(const std::vector<CircleAngle>& points,
                                              std::size_t m, double eps, double min_width,
                                              bool stop_at_first) {
  std::vector<std::uint32_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return points[a].turns() != points[b].turns() ? points[a].turns() < points[b].turns()
                                                  : a < b;
  });
  std::vector<double> sorted(m);
  for (std::size_t i = 0; i < m; ++i) sorted[i] = points[order[i]].turns();
  ArcScanner scanner{sorted, order, eps, min_width, {}, {}};
  return scanner.best_witness(stop_at_first);
}

}  // namespace

std::optional<PrefixNetResult> first_net_prefix(const ConnectedSequence& seq, double eps,
                                                double min_width) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::domain_error("first_net_prefix: eps must lie in (0, 1)");
  }
  if (!(min_width > 0.0)) {
    throw std::domain_error("first_net_prefix: min_width must be positive");
  }
  const std::size_t n = seq.points.size();
  if (n < 2) return std::nullopt;

  auto hits = [&](std::size_t m) {
    return scan_prefix(seq.points, m, eps, min_width, /*stop_at_first=*/true).has_value();
  };

  if (!hits(n)) return std::nullopt;
  // Adding points never un-qualifies an arc, so the predicate is monotone
  // in the prefix length and binary search finds the hitting length.
  std::size_t lo = 2, hi = n;  // hits(hi) is true
  if (hits(lo)) {
    hi = lo;
  } else {
    while (hi - lo > 1) {
      const std::size_t mid = lo + (hi - lo) / 2;
      (hits(mid) ? hi : lo) = mid;
    }
  }

  PrefixNetResult result;
  result.index = hi;
  auto witness = scan_prefix(seq.points, hi, eps, min_width, /*stop_at_first=*/false);
  if (!witness) throw std::logic_error("first_net_prefix: hitting prefix lost its witness");
  result.witness = std::move(*witness);
  return result;
}

NetFunctionEstimate estimate_net_function(CircleAngle alpha, CircleAngle beta, double eps,
                                          double min_width, int samples, int max_len,
                                          std::uint64_t master_seed, int n_tasks) {
  if (samples < 1) throw std::domain_error("estimate_net_function: samples must be >= 1");
  if (max_len < 2) throw std::domain_error("estimate_net_function: max_len must be >= 2");

  if (n_tasks <= 0) {
    n_tasks = static_cast<int>(
        std::clamp(std::thread::hardware_concurrency(), 1u, 4u));
  }

  std::vector<std::int64_t> hit(static_cast<std::size_t>(samples), -1);
  auto run_range = [&](int task) {
    for (int i = task; i < samples; i += n_tasks) {
      const std::uint64_t seed = derive_seed(master_seed, static_cast<std::uint64_t>(i));
      const ConnectedSequence walk = random_walk(alpha, beta, CircleAngle::from_turns(0.0),
                                                 static_cast<std::size_t>(max_len - 1), seed);
      const auto res = first_net_prefix(walk, eps, min_width);
      hit[static_cast<std::size_t>(i)] = res ? static_cast<std::int64_t>(res->index) : -1;
    }
  };

  if (n_tasks == 1) {
    run_range(0);
  } else {
    std::vector<std::future<void>> tasks;
    tasks.reserve(static_cast<std::size_t>(n_tasks));
    for (int t = 0; t < n_tasks; ++t) {
      tasks.push_back(std::async(std::launch::async, run_range, t));
    }
    for (auto& f : tasks) f.get();
  }

  NetFunctionEstimate est;
  est.samples = samples;
  std::vector<std::pair<std::int64_t, std::int64_t>> hist;
  for (std::int64_t len : hit) {
    if (len < 0) {
      ++est.censored;
      continue;
    }
    est.empirical_F_lower = std::max(est.empirical_F_lower, len);
    hist.emplace_back(len, 1);
  }
  std::sort(hist.begin(), hist.end());
  for (const auto& [len, cnt] : hist) {
    if (!est.histogram.empty() && est.histogram.back().first == len) {
      est.histogram.back().second += cnt;
    } else {
      est.histogram.emplace_back(len, cnt);
    }
  }
  return est;
}

}  // namespace kitebeam
