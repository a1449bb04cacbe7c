#include "kitebeam/nets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace kitebeam {

namespace {

constexpr double kSegSlack = 1e-12;  // relative slack for on-segment checks

void check_segment(Segment1D segment) {
  const double scale = std::max({std::abs(segment.lo), std::abs(segment.hi), 1.0});
  if (!(segment.hi - segment.lo >= 1e-15 * scale)) {
    throw std::domain_error("is_relative_eps_net: degenerate segment");
  }
}

}  // namespace

bool is_relative_eps_net(std::span<const double> sorted_points, Segment1D segment,
                         double eps) {
  check_segment(segment);
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::domain_error("is_relative_eps_net: eps must lie in (0, 1)");
  }
  if (sorted_points.empty()) return false;

  const double w = segment.width();
  const double slack = kSegSlack * w;
  double prev = 0.0;
  for (std::size_t i = 0; i < sorted_points.size(); ++i) {
    const double x = sorted_points[i];
    if (x < segment.lo - slack || x > segment.hi + slack) {
      throw std::domain_error("is_relative_eps_net: point outside segment");
    }
    const double u = std::clamp((x - segment.lo) / w, 0.0, 1.0);
    if (i == 0) {
      if (u > eps) return false;
    } else {
      if (u < prev) throw std::domain_error("is_relative_eps_net: points not sorted");
      if (u - prev > 2.0 * eps) return false;
    }
    prev = u;
  }
  return prev >= 1.0 - eps;
}

bool witness_verifies_line(const IntervalNetWitness& witness,
                           std::span<const double> host_points) {
  std::vector<double> selected;
  selected.reserve(witness.indices.size());
  for (std::size_t idx : witness.indices) {
    if (idx >= host_points.size()) return false;
    selected.push_back(host_points[idx]);
  }
  std::sort(selected.begin(), selected.end());
  return is_relative_eps_net(selected, witness.segment, witness.eps);
}

bool witness_verifies_circle(const IntervalNetWitness& witness,
                             std::span<const CircleAngle> host_points) {
  const double w = witness.segment.width();
  if (!(w > 0.0 && w < 1.0)) return false;
  std::vector<double> selected;
  selected.reserve(witness.indices.size());
  for (std::size_t idx : witness.indices) {
    if (idx >= host_points.size()) return false;
    // representative of the circle point inside the unrolled segment
    const double offset = wrap_unit(host_points[idx].turns() - witness.segment.lo);
    if (offset > w + kSegSlack) {
      // also admit points a hair below lo that wrapped to ~1
      if (offset < 1.0 - kSegSlack) return false;
      selected.push_back(witness.segment.lo);
      continue;
    }
    selected.push_back(witness.segment.lo + std::min(offset, w));
  }
  std::sort(selected.begin(), selected.end());
  return is_relative_eps_net(selected, witness.segment, witness.eps);
}

namespace {

struct Level {
  std::vector<std::size_t> indices;  // into ColoredNet::points, ascending
  Segment1D segment;
};

}  // namespace

MonochromaticResult monochromatic_subnet(const ColoredNet& net, double eps) {
  if (!(eps > 0.0 && eps <= 0.5)) {
    throw std::domain_error("monochromatic_subnet: eps must lie in (0, 1/2]");
  }
  if (net.n_colors < 1 || net.n_colors > 64) {
    throw std::domain_error("monochromatic_subnet: n_colors must lie in [1, 64]");
  }
  if (net.points.size() != net.colors.size()) {
    throw std::domain_error("monochromatic_subnet: points/colors size mismatch");
  }
  const double delta_required = std::pow(eps / 100.0, net.n_colors);
  if (!(net.delta > 0.0) || net.delta > delta_required * (1.0 + 1e-9)) {
    throw std::domain_error("monochromatic_subnet: delta exceeds (eps/100)^n");
  }
  for (int c : net.colors) {
    if (c < 1 || c > net.n_colors) {
      throw std::domain_error("monochromatic_subnet: color id out of range");
    }
  }
  if (!is_relative_eps_net(net.points, net.segment, net.delta)) {
    throw std::domain_error("monochromatic_subnet: input is not a relative delta-net");
  }

  Level cur;
  cur.indices.resize(net.points.size());
  for (std::size_t i = 0; i < net.points.size(); ++i) cur.indices[i] = i;
  cur.segment = net.segment;

  MonochromaticResult result;
  result.depth = 0;

  for (;;) {
    // distinct colors at this level
    std::uint64_t color_mask = 0;
    for (std::size_t idx : cur.indices) color_mask |= 1ULL << (net.colors[idx] - 1);
    const int distinct = static_cast<int>(__builtin_popcountll(color_mask));

    auto finish = [&](std::vector<std::size_t> indices, Segment1D segment, int color) {
      std::vector<double> pts;
      pts.reserve(indices.size());
      for (std::size_t idx : indices) pts.push_back(net.points[idx]);
      if (!is_relative_eps_net(pts, segment, eps)) {
        throw std::domain_error(
            "monochromatic_subnet: extracted subset fails the eps-net check; "
            "input violates the delta-net precondition");
      }
      result.witness.segment = segment;
      result.witness.indices = std::move(indices);
      result.witness.eps = eps;
      result.color = color;
    };

    if (distinct <= 1) {
      const int color = distinct == 1 ? net.colors[cur.indices.front()] : 1;
      finish(cur.indices, cur.segment, color);
      return result;
    }

    // Cells of width eps/2 of the current segment; the last cell absorbs
    // the remainder so no cell is thinner than eps/2.
    const double w = cur.segment.width();
    const double cell_w = w * eps / 2.0;
    const int n_cells = static_cast<int>(std::floor(2.0 / eps));
    auto cell_of = [&](double x) {
      int j = static_cast<int>(std::floor((x - cur.segment.lo) / cell_w));
      return std::clamp(j, 0, n_cells - 1);
    };

    std::vector<std::uint64_t> present(static_cast<std::size_t>(n_cells), 0);
    for (std::size_t idx : cur.indices) {
      present[static_cast<std::size_t>(cell_of(net.points[idx]))] |=
          1ULL << (net.colors[idx] - 1);
    }
    std::uint64_t covering = color_mask;
    for (const std::uint64_t mask : present) covering &= mask;

    if (covering != 0) {
      const int color = __builtin_ctzll(covering) + 1;  // smallest covering color
      std::vector<std::size_t> chosen;
      for (std::size_t idx : cur.indices) {
        if (net.colors[idx] == color) chosen.push_back(idx);
      }
      finish(std::move(chosen), cur.segment, color);
      return result;
    }

    // Descend into the first cell that misses a color.
    int target = -1;
    for (int j = 0; j < n_cells; ++j) {
      if (present[static_cast<std::size_t>(j)] != color_mask) {
        target = j;
        break;
      }
    }
    Level next;
    for (std::size_t idx : cur.indices) {
      if (cell_of(net.points[idx]) == target) next.indices.push_back(idx);
    }
    if (next.indices.size() < 2) {
      throw std::domain_error("monochromatic_subnet: cell " + std::to_string(target) +
                              " at depth " + std::to_string(result.depth) +
                              " is underpopulated; input is not a delta-net");
    }
    next.segment.lo = net.points[next.indices.front()];
    next.segment.hi = net.points[next.indices.back()];
    cur = std::move(next);
    ++result.depth;
    if (result.depth >= net.n_colors) {
      throw std::domain_error("monochromatic_subnet: descent exceeded n_colors levels");
    }
  }
}

}  // namespace kitebeam
