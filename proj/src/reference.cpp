#include "dsep/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace dsep::reference {

namespace {

constexpr double kPi = std::numbers::pi;

int ceil_cap(double alpha, int n) {
    return static_cast<int>(std::ceil(alpha * static_cast<double>(n) - 1e-9));
}

// Every combinatorially distinct offset for this direction: a uniform grid
// for coverage plus the exact events and event-gap midpoints for refinement.
std::vector<double> offset_candidates(const Instance& inst, double ux, double uy,
                                      int grid) {
    std::vector<double> events;
    events.reserve(inst.disks.size() * 2);
    for (const Disk& d : inst.disks) {
        const double t = ux * d.cx + uy * d.cy;
        events.push_back(t - d.r);
        events.push_back(t + d.r);
    }
    std::sort(events.begin(), events.end());
    std::vector<double> cands;
    cands.reserve(events.size() * 2 + static_cast<std::size_t>(grid) + 2);
    cands.push_back(events.front() - 1.0);
    for (std::size_t i = 0; i < events.size(); ++i) {
        cands.push_back(events[i]);
        cands.push_back(i + 1 < events.size() ? 0.5 * (events[i] + events[i + 1])
                                              : events[i] + 1.0);
    }
    const double lo = events.front() - 1.0;
    const double hi = events.back() + 1.0;
    for (int g = 0; g <= grid; ++g)
        cands.push_back(lo + (hi - lo) * static_cast<double>(g) / grid);
    return cands;
}

int best_for_direction(const Instance& inst, double ux, double uy, int cap, int grid) {
    int best = std::numeric_limits<int>::max();
    for (const double c : offset_candidates(inst, ux, uy, grid)) {
        int crossed = 0, left = 0, right = 0;
        for (const Disk& d : inst.disks) {
            switch (side_from_projection(ux * d.cx + uy * d.cy, d.r, c)) {
                case SideClass::Crossed: ++crossed; break;
                case SideClass::Left: ++left; break;
                case SideClass::Right: ++right; break;
            }
        }
        if (left <= cap && right <= cap) best = std::min(best, crossed);
    }
    return best;
}

}  // namespace

IntersectionGraph build_graph_bruteforce(const Instance& inst) {
    IntersectionGraph g;
    g.n = inst.n();
    for (int i = 0; i < g.n; ++i) {
        const Disk& a = inst.disks[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < g.n; ++j) {
            const Disk& b = inst.disks[static_cast<std::size_t>(j)];
            const double dx = a.cx - b.cx;
            const double dy = a.cy - b.cy;
            const double rr = a.r + b.r;
            if (dx * dx + dy * dy <= rr * rr) g.edges.emplace_back(i, j);
        }
    }
    return g;
}

int min_crossings_for_slope_grid(const Instance& inst, double angle, double alpha,
                                 int grid) {
    const int cap = ceil_cap(alpha, inst.n());
    return best_for_direction(inst, -std::sin(angle), std::cos(angle), cap, grid);
}

int min_balanced_crossings_grid(const Instance& inst, double alpha, int angle_grid) {
    const int n = inst.n();
    const int cap = ceil_cap(alpha, n);

    std::vector<double> angles;
    for (int g = 0; g < angle_grid; ++g)
        angles.push_back(kPi * static_cast<double>(g) / angle_grid);
    // refinement: every direction where the projection order can change
    for (int i = 0; i < n; ++i) {
        const Disk& a = inst.disks[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) {
            const Disk& b = inst.disks[static_cast<std::size_t>(j)];
            const double dx = b.cx - a.cx;
            const double dy = b.cy - a.cy;
            const double d = std::hypot(dx, dy);
            if (d == 0.0) continue;
            const double phi = std::atan2(dy, dx);
            auto push = [&](double v) {
                v = std::fmod(v, kPi);
                if (v < 0.0) v += kPi;
                angles.push_back(v);
            };
            push(phi + kPi / 2.0);
            for (const double s : {b.r - a.r, a.r - b.r, a.r + b.r, -a.r - b.r}) {
                if (std::abs(s) > d) continue;
                const double beta = std::acos(std::clamp(s / d, -1.0, 1.0));
                push(phi + beta + kPi / 2.0);
                push(phi - beta + kPi / 2.0);
            }
        }
    }
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
    std::vector<double> probes;
    probes.reserve(angles.size() * 2);
    for (std::size_t i = 0; i < angles.size(); ++i) {
        probes.push_back(angles[i]);
        const double next = (i + 1 < angles.size()) ? angles[i + 1] : angles[0] + kPi;
        probes.push_back(0.5 * (angles[i] + next));
    }

    int best = std::numeric_limits<int>::max();
    for (const double a : probes)
        best = std::min(best, best_for_direction(inst, -std::sin(a), std::cos(a), cap, 200));
    return best;
}

int halfplane_depth_grid(const std::vector<Point>& points, Point p, int grid) {
    int best = static_cast<int>(points.size());
    for (int g = 0; g < grid; ++g) {
        const double a = 2.0 * kPi * static_cast<double>(g) / grid;
        const double ux = std::cos(a);
        const double uy = std::sin(a);
        int count = 0;
        for (const Point& q : points)
            count += ((q.x - p.x) * ux + (q.y - p.y) * uy >= 0.0);
        best = std::min(best, count);
    }
    return best;
}

}  // namespace dsep::reference
