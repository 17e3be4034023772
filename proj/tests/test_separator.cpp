#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dsep/centerpoint.hpp"
#include "dsep/generators.hpp"
#include "dsep/graph.hpp"
#include "dsep/parallel.hpp"
#include "dsep/reference.hpp"
#include "dsep/rng.hpp"
#include "dsep/separator.hpp"
#include "test_util.hpp"

using namespace dsep;

TEST_SUITE_BEGIN("separator");

TEST_CASE("balance cap rounds rational alpha correctly") {
    CHECK(balance_cap(2.0 / 3.0, 3) == 2);
    CHECK(balance_cap(2.0 / 3.0, 6) == 4);
    CHECK(balance_cap(2.0 / 3.0, 1) == 1);
    CHECK(balance_cap(4.0 / 5.0, 5) == 4);
    CHECK(balance_cap(4.0 / 5.0, 71) == 57);
    CHECK(balance_cap(0.5, 4) == 2);
}

TEST_CASE("single disk: a line can avoid it and stay balanced") {
    Instance inst;
    inst.disks = {{0, 0.0, 0.0, 1.0}};
    for (double a : {0.0, 0.4, 1.2, 2.9}) {
        const auto r = best_line_for_slope(inst, a, 2.0 / 3.0);
        REQUIRE(r);
        CHECK(r->size() == 0);
        CHECK(r->left + r->right == 1);
    }
}

TEST_CASE("input validation") {
    Instance inst;
    inst.disks = {{0, 0.0, 0.0, 1.0}};
    CHECK_THROWS_AS(best_line_for_slope(inst, std::nan(""), 2.0 / 3.0), input_error);
    CHECK_THROWS_AS(best_line_for_slope(inst, 0.0, 0.2), input_error);
    CHECK_THROWS_AS(best_line_for_slope(Instance{}, 0.0, 2.0 / 3.0), input_error);
    CHECK_THROWS_AS(random_line_separator(inst, 0, 1), input_error);
}

TEST_CASE("snake q=11: vertical slope admits a single-crossing separator") {
    const Instance inst = gen_snake(11);
    const auto r = best_line_for_slope(inst, std::numbers::pi / 2.0, 2.0 / 3.0);
    REQUIRE(r);
    CHECK(r->size() == 1);
    validate_result(*r, inst);
}

TEST_CASE("per-slope sweep equals the dense grid oracle") {
    SplitMix64 rng(61);
    const Instance inst = testutil::random_instance(20, 8.0, 19);
    for (int it = 0; it < 10; ++it) {
        const double a = std::numbers::pi * rng.u01();
        const auto r = best_line_for_slope(inst, a, 2.0 / 3.0);
        REQUIRE(r);
        CHECK(r->size() == reference::min_crossings_for_slope_grid(inst, a, 2.0 / 3.0));
    }
}

TEST_CASE("three far-apart disks: one random direction suffices for zero") {
    Instance inst;
    inst.disks = {{0, 0.0, 0.0, 1.0}, {1, 100.0, 3.0, 1.0}, {2, 50.0, 90.0, 1.0}};
    const auto r = random_line_separator(inst, 1, 5);
    REQUIRE(r);
    CHECK(r->size() == 0);
    validate_result(*r, inst);
}

TEST_CASE("snake q=33 resists random directions") {
    const Instance inst = gen_snake(33);
    const auto r = random_line_separator(inst, 100, 42);
    REQUIRE(r);
    CHECK(r->size() >= 1);
    CHECK(r->trials_used == 100);
    validate_result(*r, inst);
}

TEST_CASE("random separator is deterministic regardless of thread count") {
    const Instance inst = testutil::random_instance(800, 30.0, 3);
    set_max_threads(1);
    const auto a = random_line_separator(inst, 40, 123);
    set_max_threads(0);
    const auto b = random_line_separator(inst, 40, 123);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->line.nx == b->line.nx);
    CHECK(a->line.c == b->line.c);
    CHECK(a->crossed == b->crossed);
    CHECK(a->left == b->left);
}

TEST_CASE("trial outcomes are a nested schedule") {
    const Instance inst = testutil::random_instance(100, 12.0, 8);
    const auto few = random_trial_outcomes(inst, 5, 77, 2.0 / 3.0);
    const auto many = random_trial_outcomes(inst, 40, 77, 2.0 / 3.0);
    for (int t = 0; t < 5; ++t) {
        CHECK(few[t].angle == many[t].angle);
        CHECK(few[t].crossings == many[t].crossings);
    }
}

TEST_CASE("per-slope sweep never beats itself through a centerpoint") {
    // a sweep-chosen line of a given slope crosses at most as many disks as
    // the line of the same slope through a centerpoint of the centers
    SplitMix64 rng(91);
    for (int inst_it = 0; inst_it < 3; ++inst_it) {
        const Instance inst = testutil::random_instance(60, 9.0, rng.next());
        const Point cp = exact_centerpoint(inst.centers()).point;
        for (int it = 0; it < 20; ++it) {
            const double a = std::numbers::pi * rng.u01();
            const auto r = best_line_for_slope(inst, a, 2.0 / 3.0);
            REQUIRE(r);
            const Classification at_cp = classify_all(Line::through_point(a, cp), inst);
            CHECK(r->size() <= static_cast<int>(at_cp.crossed.size()));
        }
    }
}

TEST_CASE("rotation equivariance of the per-slope minimum") {
    SplitMix64 rng(101);
    const Instance inst = testutil::random_instance(80, 10.0, 44);
    const double theta = 0.7326;
    Instance rot = inst;
    for (Disk& d : rot.disks) {
        const double x = d.cx * std::cos(theta) - d.cy * std::sin(theta);
        const double y = d.cx * std::sin(theta) + d.cy * std::cos(theta);
        d.cx = x;
        d.cy = y;
    }
    for (int it = 0; it < 10; ++it) {
        const double a = std::numbers::pi * rng.u01();
        const auto r0 = best_line_for_slope(inst, a, 2.0 / 3.0);
        const auto r1 = best_line_for_slope(rot, a + theta, 2.0 / 3.0);
        REQUIRE(r0);
        REQUIRE(r1);
        CHECK(r0->size() == r1->size());
    }
}

TEST_CASE("lines through a pinned point") {
    Instance one;
    one.disks = {{0, 0.0, 0.0, 1.0}};
    const SeparatorResult r = line_through_point_separator(one, {0.0, 0.0}, 8, 3);
    CHECK(r.size() == 1);  // every line through the center cuts the disk

    // early exit against a threshold
    const Instance inst = testutil::random_instance(50, 8.0, 6);
    const Point cp = exact_centerpoint(inst.centers()).point;
    const SeparatorResult s =
        line_through_point_separator(inst, cp, 200, 9, static_cast<double>(inst.n()));
    CHECK(s.trials_used == 1);  // any count passes a threshold of n
}

TEST_CASE("ring family forces many crossings through the origin") {
    const auto [inst, params] = gen_rings(100, 900);
    const double floor = (std::sqrt(6.0) / (4.0 * std::numbers::pi + 1.0) -
                          2.0 / (9.0 * std::sqrt(6.0))) *
                         std::sqrt(900.0 * (1.0 + std::log(params.layers)));
    const SeparatorResult r = line_through_point_separator(inst, {0.0, 0.0}, 50, 17);
    CHECK(static_cast<double>(r.size()) >= floor);
    validate_result(r, inst);
}

TEST_CASE("axis-parallel separator balances a tight cluster") {
    Instance inst;
    for (int i = 0; i < 5; ++i)
        inst.disks.push_back({i, 0.1 * i, 0.05 * i, 1.0});
    const SeparatorResult r = axis_parallel_separator(inst);
    CHECK(r.alpha == doctest::Approx(0.8));
    CHECK(r.left <= 4);
    CHECK(r.right <= 4);
    validate_result(r, inst);
}

TEST_CASE("axis-parallel separator on the snake") {
    const Instance inst = gen_snake(11);
    const SeparatorResult r = axis_parallel_separator(inst);
    CHECK(r.size() <= 11);
    CHECK(r.left <= 57);
    CHECK(r.right <= 57);
    validate_result(r, inst);
}

TEST_CASE("axis-parallel bound on a random instance") {
    const Instance inst = gen_random(2000, 100.0, 33, false, 0);
    const std::int64_t m = build_graph(inst).m();
    const SeparatorResult r = axis_parallel_separator(inst);
    CHECK(static_cast<double>(r.size()) <=
          382.0 * std::sqrt(static_cast<double>(m) + inst.n() / 10.0));
    validate_result(r, inst);
}

TEST_CASE("axis-parallel separator below the quantile regime") {
    Instance inst;
    inst.disks = {{0, 0.0, 0.0, 1.0}, {1, 50.0, 0.0, 1.0}};
    const SeparatorResult r = axis_parallel_separator(inst);
    CHECK(r.size() == 0);
    validate_result(r, inst);
}

TEST_CASE("optimal separator: snake q=11 has size exactly one") {
    const Instance inst = gen_snake(11);
    const SeparatorResult r = optimal_line_separator(inst);
    CHECK(r.size() == 1);
    validate_result(r, inst);
}

TEST_CASE("optimal separator: two far disks split for free") {
    Instance inst;
    inst.disks = {{0, 0.0, 0.0, 1.0}, {1, 50.0, 20.0, 1.0}};
    CHECK(optimal_line_separator(inst).size() == 0);
}

TEST_CASE("optimal separator equals the exhaustive grid oracle") {
    SplitMix64 rng(71);
    for (int it = 0; it < 8; ++it) {
        const int n = 3 + static_cast<int>(rng.u01() * 8);
        const Instance inst = testutil::random_instance(n, 6.0, rng.next());
        const SeparatorResult r = optimal_line_separator(inst);
        CHECK(r.size() == reference::min_balanced_crossings_grid(inst, 2.0 / 3.0, 2000));
        validate_result(r, inst);
    }
}

TEST_CASE("optimal separator is schedule independent") {
    const Instance inst = testutil::random_instance(40, 7.0, 29);
    set_max_threads(1);
    const SeparatorResult a = optimal_line_separator(inst);
    set_max_threads(0);
    const SeparatorResult b = optimal_line_separator(inst);
    CHECK(a.size() == b.size());
    CHECK(a.line.nx == b.line.nx);
    CHECK(a.line.c == b.line.c);
}

TEST_CASE("separators handle arbitrary radii") {
    // radii in [1, 2]
    SplitMix64 rng(37);
    Instance band;
    for (int i = 0; i < 120; ++i)
        band.disks.push_back({i, rng.u01() * 25.0, rng.u01() * 25.0, 1.0 + rng.u01()});
    const auto r = random_line_separator(band, 10, 2);
    REQUIRE(r);
    validate_result(*r, band);

    // the per-slope sweep stays exact for mixed radii too
    const Instance mixed = testutil::random_instance(18, 10.0, 53, /*mixed=*/true);
    for (double a : {0.3, 1.1, 2.6}) {
        const auto s = best_line_for_slope(mixed, a, 2.0 / 3.0);
        REQUIRE(s);
        CHECK(s->size() == reference::min_crossings_for_slope_grid(mixed, a, 2.0 / 3.0));
    }

    // nested-family disks are disjoint, so a balanced zero-crossing line is
    // out of reach only when the cap forces both sides nonempty
    const Instance nested = gen_nested_disks(5, 0.01);
    const SeparatorResult o = optimal_line_separator(nested);
    validate_result(o, nested);
    CHECK(o.size() >= 1);
}

TEST_CASE("clique-count floor for points spread over k cells") {
    // sum x_i (x_i - 1) / 2 over any composition of n into k parts is at
    // least n^2/(2k) - n/2; the counting bound behind the axis-parallel
    // crossing analysis
    SplitMix64 rng(83);
    for (int it = 0; it < 200; ++it) {
        const int k = 1 + static_cast<int>(rng.u01() * 10);
        const int n = k + static_cast<int>(rng.u01() * 60);
        std::vector<int> parts(k, 0);
        for (int i = 0; i < n; ++i) ++parts[static_cast<std::size_t>(rng.u01() * k)];
        double f = 0.0;
        for (int x : parts) f += 0.5 * x * (x - 1.0);
        CHECK(f >= static_cast<double>(n) * n / (2.0 * k) - n / 2.0 - 1e-9);
    }
}

TEST_CASE("validate_result rejects tampered results") {
    const Instance inst = gen_snake(5);
    SeparatorResult r = optimal_line_separator(inst);
    validate_result(r, inst);
    SeparatorResult bad = r;
    bad.left += 1;
    CHECK_THROWS_AS(validate_result(bad, inst), internal_error);
    SeparatorResult bad2 = r;
    bad2.alpha = 0.01;  // cap impossible to satisfy
    CHECK_THROWS_AS(validate_result(bad2, inst), internal_error);
}

TEST_SUITE_END();
