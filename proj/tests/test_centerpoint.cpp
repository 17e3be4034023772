#include <doctest.h>

#include <cmath>
#include <vector>

#include "dsep/centerpoint.hpp"
#include "dsep/parallel.hpp"
#include "dsep/reference.hpp"
#include "dsep/rng.hpp"

using namespace dsep;

namespace {

std::vector<Point> random_points(int n, double L, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.push_back({rng.u01() * L, rng.u01() * L});
    return pts;
}

}  // namespace

TEST_SUITE_BEGIN("centerpoint");

TEST_CASE("triangle centroid has depth one") {
    const std::vector<Point> tri = {{0, 0}, {4, 0}, {2, 3}};
    CHECK(halfplane_depth(tri, {2, 1}) == 1);
    CHECK(reference::halfplane_depth_grid(tri, {2, 1}, 20000) == 1);
}

TEST_CASE("middle of three collinear points has depth two") {
    const std::vector<Point> pts = {{0, 0}, {1, 0}, {2, 0}};
    CHECK(halfplane_depth(pts, {1, 0}) == 2);
    CHECK(reference::halfplane_depth_grid(pts, {1, 0}, 20000) == 2);
}

TEST_CASE("points far outside the hull have depth zero") {
    const std::vector<Point> pts = random_points(30, 5.0, 9);
    CHECK(halfplane_depth(pts, {100.0, 100.0}) == 0);
}

TEST_CASE("depth never exceeds the grid probe") {
    SplitMix64 rng(12);
    for (int it = 0; it < 20; ++it) {
        const std::vector<Point> pts = random_points(3 + it * 3, 10.0, rng.next());
        const Point p{rng.u01() * 10.0, rng.u01() * 10.0};
        CHECK(halfplane_depth(pts, p) <= reference::halfplane_depth_grid(pts, p, 4000));
    }
}

TEST_CASE("duplicates count with multiplicity") {
    std::vector<Point> pts(5, Point{1.0, 1.0});
    CHECK(halfplane_depth(pts, {1.0, 1.0}) == 5);
    pts.push_back({3.0, 1.0});
    pts.push_back({-1.0, 1.0});
    CHECK(halfplane_depth(pts, {1.0, 1.0}) == 6);
}

TEST_CASE("single point is its own centerpoint") {
    const DepthReport r = exact_centerpoint({{3.5, -2.0}});
    CHECK(r.point.x == 3.5);
    CHECK(r.depth == 1);
}

TEST_CASE("unit square corners admit a certified depth-2 point") {
    const DepthReport r = exact_centerpoint({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(r.depth >= 2);
    CHECK(halfplane_depth({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, r.point) >= 2);
}

TEST_CASE("300 random points certify depth at least 100") {
    const std::vector<Point> pts = random_points(300, 50.0, 77);
    const DepthReport r = exact_centerpoint(pts);
    CHECK(r.depth >= 100);
    CHECK(halfplane_depth(pts, r.point) >= 100);
}

TEST_CASE("certificate holds across sizes") {
    SplitMix64 rng(41);
    for (int it = 0; it < 25; ++it) {
        const int n = 10 + static_cast<int>(rng.u01() * 110);
        const std::vector<Point> pts = random_points(n, 30.0, rng.next());
        const DepthReport r = exact_centerpoint(pts);
        CHECK(r.depth >= (n + 2) / 3);
    }
}

TEST_CASE("collinear input still certifies") {
    std::vector<Point> pts;
    for (int i = 0; i < 9; ++i) pts.push_back({static_cast<double>(i), 2.0});
    const DepthReport r = exact_centerpoint(pts);
    CHECK(r.depth >= 3);
}

TEST_CASE("depth is invariant under rigid motions") {
    SplitMix64 rng(55);
    const std::vector<Point> pts = random_points(60, 12.0, 5);
    const Point p{6.0, 6.0};
    const int d0 = halfplane_depth(pts, p);
    for (int it = 0; it < 8; ++it) {
        const double a = 2.0 * 3.14159265358979 * rng.u01();
        const double tx = (rng.u01() - 0.5) * 50.0;
        const double ty = (rng.u01() - 0.5) * 50.0;
        std::vector<Point> moved;
        for (const Point& q : pts)
            moved.push_back({q.x * std::cos(a) - q.y * std::sin(a) + tx,
                             q.x * std::sin(a) + q.y * std::cos(a) + ty});
        const Point pm{p.x * std::cos(a) - p.y * std::sin(a) + tx,
                       p.x * std::sin(a) + p.y * std::cos(a) + ty};
        CHECK(halfplane_depth(moved, pm) == d0);
    }
}

TEST_CASE("centerpoint construction is schedule independent") {
    const std::vector<Point> pts = random_points(150, 20.0, 13);
    set_max_threads(1);
    const DepthReport a = exact_centerpoint(pts);
    set_max_threads(0);
    const DepthReport b = exact_centerpoint(pts);
    CHECK(a.point.x == b.point.x);
    CHECK(a.point.y == b.point.y);
    CHECK(a.depth == b.depth);
}

TEST_SUITE_END();
