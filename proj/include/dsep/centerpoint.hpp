#pragma once

#include <vector>

#include "dsep/geometry.hpp"

namespace dsep {

struct DepthReport {
    Point point;
    int depth = 0;
};

// Minimum over all directions u of |{q : (q - p) . u >= 0}| (closed
// halfplanes through p; duplicates count with multiplicity). Angular sweep
// over the directions to each point, O(n log n): the count only changes at
// directions perpendicular to some q - p, and local minima live strictly
// between those events, so events plus gap midpoints cover every value.
int halfplane_depth(const std::vector<Point>& points, Point p);

// A point of depth >= ceil(n/3), found by intersecting, per direction
// determined by a point pair, the halfplane bounded at the matching order
// statistic of projections; the intersection is nonempty and any point of it
// qualifies. The result is always re-certified with halfplane_depth; an
// uncertified point is never returned (internal_error instead).
DepthReport exact_centerpoint(const std::vector<Point>& points);

}  // namespace dsep
