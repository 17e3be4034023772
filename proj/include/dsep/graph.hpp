#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dsep/geometry.hpp"

namespace dsep {

// Intersection graph over disk indices. Edge (i, j), i < j, present iff
// dist(center_i, center_j) <= r_i + r_j (closed disks). Edge list is sorted
// by (i, j) so construction is schedule-independent.
struct IntersectionGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    std::int64_t m() const { return static_cast<std::int64_t>(edges.size()); }
};

// Uniform spatial-hash grid of cell size 2*r_max, expected O(n + m) for
// bounded radius ratios. Wildly mixed radii fall back to one grid per
// power-of-two radius class with cross-class queries.
IntersectionGraph build_graph(const Instance& inst);

// True iff the graph has a single connected component (vacuously true for
// n <= 1). Union-find with path compression.
bool is_connected(const IntersectionGraph& g);

std::vector<int> vertex_degrees(const IntersectionGraph& g);

}  // namespace dsep
