#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dsep/geometry.hpp"
#include "dsep/generators.hpp"
#include "dsep/rng.hpp"
#include "test_util.hpp"

using namespace dsep;

TEST_SUITE_BEGIN("geometry");

TEST_CASE("signed distance and side classes on the y-axis line") {
    const Line x0(1.0, 0.0, 0.0);  // line x = 0

    const Disk centered{0, 0.0, 0.0, 1.0};
    CHECK(signed_distance(x0, centered) == 0.0);
    CHECK(side_of(x0, centered) == SideClass::Crossed);

    const Disk right{1, 2.0, 0.0, 1.0};
    CHECK(signed_distance(x0, right) == 2.0);
    CHECK(side_of(x0, right) == SideClass::Right);  // d > r strictly

    const Disk tangent{2, 1.0, 0.0, 1.0};
    CHECK(signed_distance(x0, tangent) == 1.0);
    CHECK(side_of(x0, tangent) == SideClass::Crossed);  // closed disk touches
}

TEST_CASE("non-finite input is rejected") {
    const Line l(1.0, 0.0, 0.0);
    CHECK_THROWS_AS(signed_distance(l, Disk{0, std::nan(""), 0.0, 1.0}), input_error);
    CHECK_THROWS_AS(Line(1.0, 1.0, 0.0), input_error);  // not unit
    CHECK_THROWS_AS(Line(std::nan(""), 0.0, 0.0), input_error);
    CHECK(Line::from_angle(0.7, 3.0).nx == -std::sin(0.7));
}

TEST_CASE("classify_all partitions three spread disks") {
    Instance inst;
    inst.disks = {{0, -5.0, 0.0, 1.0}, {1, 0.0, 0.0, 1.0}, {2, 5.0, 0.0, 1.0}};
    const Classification c = classify_all(Line(1.0, 0.0, 0.0), inst);
    CHECK(c.crossed == std::vector<int>{1});
    CHECK(c.left == 1);
    CHECK(c.right == 1);
}

TEST_CASE("classify_all on the snake at a vertical connector line") {
    const Instance inst = gen_snake(11);
    const Line x6(1.0, 0.0, 6.0);
    // independent count straight from the definition
    int left = 0, right = 0, crossed = 0;
    for (const Disk& d : inst.disks) {
        const double dist = d.cx - 6.0;
        if (dist < -d.r)
            ++left;
        else if (dist > d.r)
            ++right;
        else
            ++crossed;
    }
    CHECK(crossed == 1);
    CHECK(left == 35);
    CHECK(right == 35);

    const Classification c = classify_all(x6, inst);
    CHECK(static_cast<int>(c.crossed.size()) == crossed);
    CHECK(c.left == left);
    CHECK(c.right == right);
}

TEST_CASE("a line beyond every disk leaves them all on one side") {
    const Instance inst = testutil::random_instance(40, 30.0, 99);
    const Classification c = classify_all(Line(1.0, 0.0, 1e6), inst);
    CHECK(c.crossed.empty());
    CHECK(c.left == 40);
    CHECK(c.right == 0);
}

TEST_CASE("trichotomy and normal flip") {
    SplitMix64 rng(7);
    for (int it = 0; it < 1000; ++it) {
        const double a = std::numbers::pi * rng.u01();
        const Line l = Line::from_angle(a, (rng.u01() - 0.5) * 40.0);
        const Disk d{0, (rng.u01() - 0.5) * 40.0, (rng.u01() - 0.5) * 40.0,
                     0.1 + 3.0 * rng.u01()};
        const SideClass s = side_of(l, d);
        const SideClass f = side_of(l.flipped(), d);
        if (s == SideClass::Crossed) {
            CHECK(f == SideClass::Crossed);
        } else if (s == SideClass::Left) {
            CHECK(f == SideClass::Right);
        } else {
            CHECK(f == SideClass::Left);
        }
    }
}

TEST_CASE("translation invariance of classification") {
    SplitMix64 rng(21);
    const Instance inst = testutil::random_instance(120, 20.0, 5, /*mixed=*/true);
    for (int it = 0; it < 50; ++it) {
        const double a = std::numbers::pi * rng.u01();
        const double off = (rng.u01() - 0.5) * 30.0;
        const double tx = (rng.u01() - 0.5) * 200.0;
        const double ty = (rng.u01() - 0.5) * 200.0;
        const Line l = Line::from_angle(a, off);
        Instance moved = inst;
        for (Disk& d : moved.disks) {
            d.cx += tx;
            d.cy += ty;
        }
        const Line lm(l.nx, l.ny, l.c + l.nx * tx + l.ny * ty);
        const Classification c0 = classify_all(l, inst);
        const Classification c1 = classify_all(lm, moved);
        CHECK(c0.crossed == c1.crossed);
        CHECK(c0.left == c1.left);
        CHECK(c0.right == c1.right);
    }
}

TEST_CASE("classify_all agrees with per-disk side_of") {
    SplitMix64 rng(3);
    for (int it = 0; it < 1000; ++it) {
        const int n = 1 + static_cast<int>(rng.u01() * 30);
        const Instance inst = testutil::random_instance(n, 25.0, rng.next(), it % 3 == 0);
        const Line l =
            Line::from_angle(std::numbers::pi * rng.u01(), (rng.u01() - 0.5) * 50.0);
        const Classification c = classify_all(l, inst);
        int left = 0, right = 0;
        std::vector<int> crossed;
        for (const Disk& d : inst.disks) {
            switch (side_of(l, d)) {
                case SideClass::Left: ++left; break;
                case SideClass::Right: ++right; break;
                case SideClass::Crossed: crossed.push_back(d.id); break;
            }
        }
        REQUIRE(c.left == left);
        REQUIRE(c.right == right);
        REQUIRE(c.crossed == crossed);
        REQUIRE(static_cast<int>(c.crossed.size()) + c.left + c.right == n);
    }
    // large instance exercises the parallel path
    const Instance big = testutil::random_instance(9000, 120.0, 11);
    const Line l = Line::from_angle(0.3, 60.0);
    const Classification c = classify_all(l, big);
    int left = 0;
    for (const Disk& d : big.disks) left += (side_of(l, d) == SideClass::Left);
    CHECK(c.left == left);
}

TEST_SUITE_END();
