#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "dsep/generators.hpp"
#include "dsep/graph.hpp"
#include "dsep/parallel.hpp"
#include "dsep/reference.hpp"
#include "dsep/rng.hpp"
#include "test_util.hpp"

using namespace dsep;

namespace {

bool is_path_graph(const IntersectionGraph& g) {
    if (g.n == 1) return g.edges.empty();
    if (g.m() != g.n - 1) return false;
    const std::vector<int> deg = vertex_degrees(g);
    const int ones = static_cast<int>(std::count(deg.begin(), deg.end(), 1));
    const int twos = static_cast<int>(std::count(deg.begin(), deg.end(), 2));
    return ones == 2 && twos == g.n - 2 && is_connected(g);
}

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("tangent disks are adjacent (closed disks)") {
    Instance inst;
    inst.disks = {{0, 0.0, 0.0, 1.0}, {1, 2.0, 0.0, 1.0}};
    const IntersectionGraph g = build_graph(inst);
    CHECK(g.m() == 1);
}

TEST_CASE("snake q=11 is a 71-vertex path") {
    const IntersectionGraph g = build_graph(gen_snake(11));
    CHECK(g.n == 71);
    CHECK(g.m() == 70);
    CHECK(is_path_graph(g));
}

TEST_CASE("snake instances stay paths for small q") {
    for (int q = 3; q <= 15; q += 2) CHECK(is_path_graph(build_graph(gen_snake(q))));
}

TEST_CASE("hash grid equals brute force on random instances") {
    SplitMix64 rng(17);
    for (int it = 0; it < 30; ++it) {
        const int n = 2 + static_cast<int>(rng.u01() * 198);
        const bool mixed = it % 3 == 0;  // radius ratio up to 16 hits the class grids
        const Instance inst = testutil::random_instance(n, 10.0 + 30.0 * rng.u01(),
                                                        rng.next(), mixed);
        const IntersectionGraph fast = build_graph(inst);
        const IntersectionGraph ref = reference::build_graph_bruteforce(inst);
        REQUIRE(fast.edges == ref.edges);
    }
}

TEST_CASE("fifty random unit disks match the all-pairs oracle") {
    const Instance inst = testutil::random_instance(50, 10.0, 4);
    CHECK(build_graph(inst).edges == reference::build_graph_bruteforce(inst).edges);
}

TEST_CASE("nested-disk family is edge-free across its radius classes") {
    const Instance inst = gen_nested_disks(6, 0.01);
    CHECK(inst.max_radius() / inst.min_radius() > 4.0);
    CHECK(build_graph(inst).m() == 0);
    CHECK(reference::build_graph_bruteforce(inst).m() == 0);
}

TEST_CASE("edge count is invariant under rigid motions") {
    SplitMix64 rng(23);
    const Instance inst = testutil::random_instance(150, 18.0, 8);
    const std::int64_t m0 = build_graph(inst).m();
    for (int it = 0; it < 10; ++it) {
        const double a = 2.0 * 3.14159265358979 * rng.u01();
        const double tx = (rng.u01() - 0.5) * 100.0;
        const double ty = (rng.u01() - 0.5) * 100.0;
        Instance moved = inst;
        for (Disk& d : moved.disks) {
            const double x = d.cx * std::cos(a) - d.cy * std::sin(a) + tx;
            const double y = d.cx * std::sin(a) + d.cy * std::cos(a) + ty;
            d.cx = x;
            d.cy = y;
        }
        CHECK(build_graph(moved).m() == m0);
    }
}

TEST_CASE("connectivity") {
    CHECK(is_connected(build_graph(gen_snake(3))));

    Instance two;
    two.disks = {{0, 0.0, 0.0, 1.0}, {1, 10.0, 0.0, 1.0}};
    CHECK_FALSE(is_connected(build_graph(two)));

    Instance empty;
    CHECK(is_connected(build_graph(empty)));

    Instance one;
    one.disks = {{0, 0.0, 0.0, 1.0}};
    CHECK(is_connected(build_graph(one)));
}

TEST_CASE("graph construction is schedule independent") {
    const Instance inst = testutil::random_instance(3000, 60.0, 31);
    set_max_threads(1);
    const IntersectionGraph a = build_graph(inst);
    set_max_threads(0);
    const IntersectionGraph b = build_graph(inst);
    CHECK(a.edges == b.edges);
}

TEST_SUITE_END();
