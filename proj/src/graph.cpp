#include "dsep/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "dsep/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dsep {

namespace {

using CellMap = std::unordered_map<std::uint64_t, std::vector<int>>;

std::uint64_t cell_key(int qx, int qy) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(qx)) << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(qy));
}

int cell_coord(double v, double cell) { return static_cast<int>(std::floor(v / cell)); }

bool disks_intersect(const Disk& a, const Disk& b) {
    const double dx = a.cx - b.cx;
    const double dy = a.cy - b.cy;
    const double rr = a.r + b.r;
    return dx * dx + dy * dy <= rr * rr;
}

CellMap bucket_cells(const Instance& inst, const std::vector<int>& ids, double cell) {
    CellMap map;
    map.reserve(ids.size() * 2);
    for (int i : ids) {
        const Disk& d = inst.disks[static_cast<std::size_t>(i)];
        map[cell_key(cell_coord(d.cx, cell), cell_coord(d.cy, cell))].push_back(i);
    }
    return map;
}

// Append every intersecting pair (min, max) between `probes` and the disks
// hashed in `map`. With cell >= max pairwise radius sum, the 3x3 block around
// a probe covers all candidates. same_set: probes are the hashed set itself,
// so emit only j > i to visit each unordered pair once.
void scan_against(const Instance& inst, const std::vector<int>& probes, const CellMap& map,
                  double cell, bool same_set,
                  std::vector<std::vector<std::pair<int, int>>>& buf) {
    const int np = static_cast<int>(probes.size());
#pragma omp parallel num_threads(max_threads())
    {
#ifdef _OPENMP
        const int tid = omp_get_thread_num();
#else
        const int tid = 0;
#endif
        auto& local = buf[static_cast<std::size_t>(tid)];
#pragma omp for schedule(static)
        for (int p = 0; p < np; ++p) {
            const int i = probes[static_cast<std::size_t>(p)];
            const Disk& di = inst.disks[static_cast<std::size_t>(i)];
            const int qx = cell_coord(di.cx, cell);
            const int qy = cell_coord(di.cy, cell);
            for (int ax = qx - 1; ax <= qx + 1; ++ax) {
                for (int ay = qy - 1; ay <= qy + 1; ++ay) {
                    auto it = map.find(cell_key(ax, ay));
                    if (it == map.end()) continue;
                    for (int j : it->second) {
                        if (same_set && j <= i) continue;
                        const Disk& dj = inst.disks[static_cast<std::size_t>(j)];
                        if (disks_intersect(di, dj))
                            local.emplace_back(std::min(i, j), std::max(i, j));
                    }
                }
            }
        }
    }
}

}  // namespace

IntersectionGraph build_graph(const Instance& inst) {
    validate_instance(inst);
    IntersectionGraph g;
    g.n = inst.n();
    if (g.n < 2) return g;

    const double rmin = inst.min_radius();
    const double rmax = inst.max_radius();

    // Radius classes: disks with r in [rmin*2^b, rmin*2^(b+1)). A single
    // class unless the spread is large enough to degrade the uniform grid.
    std::vector<std::vector<int>> classes;
    if (rmax / rmin <= 4.0) {
        classes.emplace_back(static_cast<std::size_t>(g.n));
        std::iota(classes[0].begin(), classes[0].end(), 0);
    } else {
        for (int i = 0; i < g.n; ++i) {
            const double ratio = inst.disks[static_cast<std::size_t>(i)].r / rmin;
            int b = static_cast<int>(std::floor(std::log2(ratio)));
            b = std::max(b, 0);
            if (static_cast<std::size_t>(b) >= classes.size())
                classes.resize(static_cast<std::size_t>(b) + 1);
            classes[static_cast<std::size_t>(b)].push_back(i);
        }
    }

    std::vector<double> class_rmax(classes.size(), 0.0);
    for (std::size_t b = 0; b < classes.size(); ++b)
        for (int i : classes[b])
            class_rmax[b] = std::max(class_rmax[b], inst.disks[static_cast<std::size_t>(i)].r);

    const int nthreads = max_threads();
    std::vector<std::vector<std::pair<int, int>>> buf(static_cast<std::size_t>(nthreads));

    for (std::size_t b = 0; b < classes.size(); ++b) {
        if (classes[b].empty()) continue;
        const double cell = 2.0 * class_rmax[b];
        const CellMap map = bucket_cells(inst, classes[b], cell);
        scan_against(inst, classes[b], map, cell, /*same_set=*/true, buf);
        // cross-class pairs probe the grid of the larger class, whose cell
        // size bounds the largest possible radius sum
        for (std::size_t a = 0; a < b; ++a)
            if (!classes[a].empty()) scan_against(inst, classes[a], map, cell, false, buf);
    }

    std::size_t total = 0;
    for (const auto& v : buf) total += v.size();
    g.edges.reserve(total);
    for (auto& v : buf) g.edges.insert(g.edges.end(), v.begin(), v.end());
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

bool is_connected(const IntersectionGraph& g) {
    if (g.n <= 1) return true;
    std::vector<int> parent(static_cast<std::size_t>(g.n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    int components = g.n;
    for (const auto& [i, j] : g.edges) {
        const int ri = find(i);
        const int rj = find(j);
        if (ri != rj) {
            parent[static_cast<std::size_t>(ri)] = rj;
            --components;
        }
    }
    return components == 1;
}

std::vector<int> vertex_degrees(const IntersectionGraph& g) {
    std::vector<int> deg(static_cast<std::size_t>(g.n), 0);
    for (const auto& [i, j] : g.edges) {
        ++deg[static_cast<std::size_t>(i)];
        ++deg[static_cast<std::size_t>(j)];
    }
    return deg;
}

}  // namespace dsep
