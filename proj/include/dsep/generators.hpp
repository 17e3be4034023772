#pragma once

#include <cstdint>
#include <utility>

#include "dsep/geometry.hpp"

namespace dsep {

// Centers i.i.d. uniform in [0, L]^2, radius 1. With require_connected the
// draw is rejected and redrawn (consuming the same stream, so the result is
// a deterministic function of the seed) until the intersection graph is
// connected; after max_rejects rejections an input_error reports the count.
Instance gen_random(int n, double L, std::uint64_t seed, bool require_connected,
                    int max_rejects = 1000);

// Path-shaped adversarial family on an integer grid, parameterized by odd
// q >= 3: full columns at odd abscissas joined by alternating top/bottom
// connector disks, n = (q^2-1)/2 + q, all radii 2/3 (diameter 4/3), so the
// intersection graph is a path (m = n-1) yet a vertical line between columns
// crosses exactly one disk.
Instance gen_snake(int q);

// Smallest k with k >= sqrt(6m / (1 + ln(n/k))), by ascending search.
// Requires 9n <= m <= floor(n^2/6); such k exists and is at most n.
int choose_ring_count(int n, std::int64_t m);

// 1/(4*pi), the epsilon every ring-family bound tolerates.
double default_ring_eps();

struct RingFamilyParams {
    int n_requested = 0;
    std::int64_t m_requested = 0;
    int k = 0;       // disks per ring
    int layers = 0;  // number of rings
    double eps = 0.0;
    int n_built = 0;
    std::int64_t m_built = 0;
};

// Adversarial concentric-ring family: ceil(n/k) rings of radius 2*i*(1+eps)
// around the origin, each carrying k evenly spaced unit disks (phase 0).
// Rings are far enough apart that disks intersect only within a ring, the
// built size satisfies n <= n' <= 2n and ceil(m/9) <= m' <= 6m, and every
// line through the origin is forced to cross many disks.
std::pair<Instance, RingFamilyParams> gen_rings(int n, std::int64_t m, double eps);
std::pair<Instance, RingFamilyParams> gen_rings(int n, std::int64_t m);

// Pairwise disjoint disks whose radii grow by a factor of 3 per level: one
// disk at the origin, then per level six disks of the enclosing radius
// placed around the previous levels at alternating 30-degree phases, all
// shrunk by 1-eps to remove tangencies. Any balanced line must cross
// linearly many of them.
Instance gen_nested_disks(int levels, double eps = 0.01);

}  // namespace dsep
