#pragma once

#include <cstdint>
#include <vector>

#include "dsep/geometry.hpp"
#include "dsep/graph.hpp"

namespace dsep::reference {

// Serial reference implementations. Deliberately straightforward (quadratic
// scans, dense grids) so they can stand as independent oracles for the fast
// paths in tests and in the serial-vs-parallel benchmark.

// All-pairs intersection test, O(n^2).
IntersectionGraph build_graph_bruteforce(const Instance& inst);

// Minimum balanced crossing count for one direction, by classifying every
// disk against a dense offset grid refined with the exact projection events
// and the gaps between them.
int min_crossings_for_slope_grid(const Instance& inst, double angle, double alpha,
                                 int grid = 2000);

// Minimum balanced crossing count over all lines: a uniform angle grid plus
// every pair-critical direction and the gaps between them, each direction
// scanned with min_crossings_for_slope_grid's offset set. Exponential in
// nothing but patience; intended for small n.
int min_balanced_crossings_grid(const Instance& inst, double alpha, int angle_grid = 10000);

// Depth of p by probing a dense grid of directions; an upper bound on the
// exact halfplane depth that is tight once the grid resolves the point set.
int halfplane_depth_grid(const std::vector<Point>& points, Point p, int grid = 100000);

}  // namespace dsep::reference
