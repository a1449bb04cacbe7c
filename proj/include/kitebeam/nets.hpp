#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kitebeam/circle.hpp"

namespace kitebeam {

struct Segment1D {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
};

// Relative eps-net predicate: after the affine map of [lo, hi] onto
// [0, 1], every point of [0, 1] must have a sample within eps. With the
// points sorted this reduces to the gap test
//   first <= eps,  last >= 1 - eps,  consecutive gaps <= 2 eps,
// with closed inequalities so uniform grids of step exactly 2 eps pass.
// An empty point set is not a net (false, not an error); a degenerate
// segment is a domain error.
bool is_relative_eps_net(std::span<const double> sorted_points, Segment1D segment,
                         double eps);

// A verified sub-net: a segment (possibly unrolled past 1 when the host
// points live on the circle; hi - lo < 1 always) together with indices
// into a host point set whose selected points form a relative eps-net of
// the segment.
struct IntervalNetWitness {
  Segment1D segment;
  std::vector<std::size_t> indices;
  double eps = 0.0;
};

// Verification helpers. The line variant indexes a plain real point set;
// the circle variant maps every point onto the segment's unrolling first.
bool witness_verifies_line(const IntervalNetWitness& witness,
                           std::span<const double> host_points);
bool witness_verifies_circle(const IntervalNetWitness& witness,
                             std::span<const CircleAngle> host_points);

// A colored relative delta-net of a segment; color ids are 1..n_colors.
struct ColoredNet {
  Segment1D segment;
  std::vector<double> points;  // ascending
  std::vector<int> colors;
  int n_colors = 0;
  double delta = 0.0;
};

struct MonochromaticResult {
  IntervalNetWitness witness;  // indices into ColoredNet::points
  int color = 0;
  int depth = 0;               // recursion depth actually used
};

// Constructive color extraction: given a relative delta-net colored in n
// colors with delta <= (eps/100)^n, produces a single-color subset that is
// a relative eps-net of some subsegment. Works by cell subdivision: the
// current segment is split into floor(2/eps) cells of width eps/2 (the
// last cell absorbs the remainder); a color present in every cell wins,
// otherwise the search descends into the first cell that misses a color,
// whose points carry at most n-1 colors. Descends at most n-1 times.
// Requires eps in (0, 1/2]. Violated preconditions surface as domain
// errors naming the offending cell.
MonochromaticResult monochromatic_subnet(const ColoredNet& net, double eps);

}  // namespace kitebeam
