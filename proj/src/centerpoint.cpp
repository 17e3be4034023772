#include "dsep/centerpoint.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "dsep/parallel.hpp"

namespace dsep {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

double wrap_tau(double a) {
    a = std::fmod(a, kTau);
    if (a < 0.0) a += kTau;
    return a;
}

// #angles in the closed arc [lo, hi] on the circle, arc endpoints already in
// [0, tau). `sorted` ascending.
int count_arc(const std::vector<double>& sorted, double lo, double hi) {
    auto lb = [&](double v) {
        return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                                sorted.begin());
    };
    auto ub = [&](double v) {
        return static_cast<int>(std::upper_bound(sorted.begin(), sorted.end(), v) -
                                sorted.begin());
    };
    const int n = static_cast<int>(sorted.size());
    if (lo <= hi) return ub(hi) - lb(lo);
    return (n - lb(lo)) + ub(hi);  // wraps past tau
}

struct Halfplane {
    double ux = 0.0, uy = 0.0;  // outward normal (constraint ux*x + uy*y <= t)
    double t = 0.0;
    bool valid = false;
};

std::vector<Point> clip(const std::vector<Point>& poly, const Halfplane& hp) {
    std::vector<Point> out;
    const std::size_t v = poly.size();
    out.reserve(v + 1);
    for (std::size_t i = 0; i < v; ++i) {
        const Point cur = poly[i];
        const Point nxt = poly[(i + 1) % v];
        const double dc = hp.ux * cur.x + hp.uy * cur.y - hp.t;
        const double dn = hp.ux * nxt.x + hp.uy * nxt.y - hp.t;
        const bool keep_cur = dc <= 0.0;
        const bool keep_nxt = dn <= 0.0;
        if (keep_cur) out.push_back(cur);
        if (keep_cur != keep_nxt) {
            const double s = dc / (dc - dn);
            out.push_back({cur.x + s * (nxt.x - cur.x), cur.y + s * (nxt.y - cur.y)});
        }
    }
    return out;
}

bool all_inside(const std::vector<Point>& poly, const Halfplane& hp) {
    for (const Point& p : poly)
        if (hp.ux * p.x + hp.uy * p.y > hp.t) return false;
    return true;
}

// Intersection point of the lines through (a,b) and (c,d); false for
// parallel lines.
bool line_line(Point a, Point b, Point c, Point d, Point& out) {
    const double dx1 = b.x - a.x, dy1 = b.y - a.y;
    const double dx2 = d.x - c.x, dy2 = d.y - c.y;
    const double den = dx1 * dy2 - dy1 * dx2;
    if (den == 0.0) return false;
    const double s = ((c.x - a.x) * dy2 - (c.y - a.y) * dx2) / den;
    out = {a.x + s * dx1, a.y + s * dy1};
    return std::isfinite(out.x) && std::isfinite(out.y);
}

double order_statistic(const std::vector<Point>& points, double ux, double uy, int rank,
                       std::vector<double>& scratch) {
    scratch.resize(points.size());
    for (std::size_t q = 0; q < points.size(); ++q)
        scratch[q] = ux * points[q].x + uy * points[q].y;
    std::nth_element(scratch.begin(), scratch.begin() + rank, scratch.end());
    return scratch[static_cast<std::size_t>(rank)];
}

}  // namespace

int halfplane_depth(const std::vector<Point>& points, Point p) {
    const int n = static_cast<int>(points.size());
    if (n == 0) throw input_error("halfplane_depth: empty point set");

    int coincident = 0;
    std::vector<double> theta;
    theta.reserve(points.size());
    for (const Point& q : points) {
        const double dx = q.x - p.x;
        const double dy = q.y - p.y;
        if (dx == 0.0 && dy == 0.0) {
            ++coincident;  // in every closed halfplane through p
            continue;
        }
        theta.push_back(wrap_tau(std::atan2(dy, dx)));
    }
    if (theta.empty()) return n;
    std::sort(theta.begin(), theta.end());

    std::vector<double> events;
    events.reserve(theta.size() * 2);
    for (double a : theta) {
        events.push_back(wrap_tau(a + std::numbers::pi / 2.0));
        events.push_back(wrap_tau(a - std::numbers::pi / 2.0));
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());

    auto count_at = [&](double phi) {
        const double lo = wrap_tau(phi - std::numbers::pi / 2.0);
        const double hi = wrap_tau(phi + std::numbers::pi / 2.0);
        return coincident + count_arc(theta, lo, hi);
    };

    int best = n;
    const std::size_t e = events.size();
    for (std::size_t i = 0; i < e; ++i) {
        best = std::min(best, count_at(events[i]));
        const double next = (i + 1 < e) ? events[i + 1] : events[0] + kTau;
        best = std::min(best, count_at(wrap_tau(0.5 * (events[i] + next))));
    }
    return best;
}

DepthReport exact_centerpoint(const std::vector<Point>& points) {
    const int n = static_cast<int>(points.size());
    if (n == 0) throw input_error("exact_centerpoint: empty point set");
    const int need = (n + 2) / 3;  // ceil(n/3)

    if (n == 1) return {points[0], 1};

    // One halfplane per direction: outward normal u, bound at the ascending
    // projection order statistic of rank n - need + 1, so every point of the
    // intersection keeps at least `need` points in each closed halfplane
    // through it. The binding constraint can only change at directions
    // perpendicular to a point difference, so those directions (both signs)
    // generate the full intersection; the axes cover collinear inputs.
    const std::int64_t pairs =
        static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n - 1) / 2;
    std::vector<Halfplane> hps(static_cast<std::size_t>(pairs) * 2 + 4);
    const int rank = n - need;  // 0-indexed ascending

#pragma omp parallel num_threads(max_threads())
    {
        std::vector<double> scratch;
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t pidx = 0; pidx < pairs; ++pidx) {
            std::int64_t i = 0;
            std::int64_t rem = pidx;
            std::int64_t row = n - 1;
            while (rem >= row) {
                rem -= row;
                --row;
                ++i;
            }
            const std::int64_t j = i + 1 + rem;
            const Point a = points[static_cast<std::size_t>(i)];
            const Point b = points[static_cast<std::size_t>(j)];
            const double vx = b.x - a.x;
            const double vy = b.y - a.y;
            const double len = std::hypot(vx, vy);
            Halfplane h1, h2;
            if (len > 0.0) {
                const double ux = -vy / len;
                const double uy = vx / len;
                h1 = {ux, uy, order_statistic(points, ux, uy, rank, scratch), true};
                h2 = {-ux, -uy, order_statistic(points, -ux, -uy, rank, scratch), true};
            }
            hps[static_cast<std::size_t>(pidx) * 2] = h1;
            hps[static_cast<std::size_t>(pidx) * 2 + 1] = h2;
        }
    }
    {
        std::vector<double> scratch;
        const double axes[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (int a = 0; a < 4; ++a)
            hps[hps.size() - 4 + static_cast<std::size_t>(a)] = {
                axes[a][0], axes[a][1],
                order_statistic(points, axes[a][0], axes[a][1], rank, scratch), true};
    }

    // Clip a box around everything down to the feasible region.
    double xmin = points[0].x, xmax = points[0].x, ymin = points[0].y, ymax = points[0].y;
    for (const Point& q : points) {
        xmin = std::min(xmin, q.x);
        xmax = std::max(xmax, q.x);
        ymin = std::min(ymin, q.y);
        ymax = std::max(ymax, q.y);
    }
    const double pad = 1.0 + 1e-9 * (std::abs(xmax - xmin) + std::abs(ymax - ymin));
    std::vector<Point> poly = {{xmin - pad, ymin - pad},
                               {xmax + pad, ymin - pad},
                               {xmax + pad, ymax + pad},
                               {xmin - pad, ymax + pad}};
    for (const Halfplane& hp : hps) {
        if (!hp.valid || poly.empty()) continue;
        if (all_inside(poly, hp)) continue;
        poly = clip(poly, hp);
    }

    std::vector<Point> candidates;
    if (!poly.empty()) {
        Point centroid{0.0, 0.0};
        for (const Point& v : poly) {
            centroid.x += v.x;
            centroid.y += v.y;
        }
        centroid.x /= static_cast<double>(poly.size());
        centroid.y /= static_cast<double>(poly.size());
        candidates.push_back(centroid);
        candidates.insert(candidates.end(), poly.begin(), poly.end());
    }

    // Degenerate regions (segments, single points) can defeat floating-point
    // clipping. For small n enumerate the classical candidates: pair
    // midpoints, intersections of lines through point pairs, and the points
    // themselves.
    if (n <= 25) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                candidates.push_back({0.5 * (points[static_cast<std::size_t>(i)].x +
                                             points[static_cast<std::size_t>(j)].x),
                                      0.5 * (points[static_cast<std::size_t>(i)].y +
                                             points[static_cast<std::size_t>(j)].y)});
        std::vector<std::pair<int, int>> lines;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) lines.emplace_back(i, j);
        for (std::size_t a = 0; a < lines.size(); ++a)
            for (std::size_t b = a + 1; b < lines.size(); ++b) {
                Point x;
                if (line_line(points[static_cast<std::size_t>(lines[a].first)],
                              points[static_cast<std::size_t>(lines[a].second)],
                              points[static_cast<std::size_t>(lines[b].first)],
                              points[static_cast<std::size_t>(lines[b].second)], x))
                    candidates.push_back(x);
            }
    }
    candidates.insert(candidates.end(), points.begin(), points.end());

    for (const Point& cand : candidates) {
        if (!std::isfinite(cand.x) || !std::isfinite(cand.y)) continue;
        const int depth = halfplane_depth(points, cand);
        if (depth >= need) return {cand, depth};
    }
    throw internal_error("exact_centerpoint: failed to certify a centerpoint");
}

}  // namespace dsep
