// Benchmark comparing the OpenMP kernels against their serial references:
// the same kernels pinned to one thread, plus the brute-force oracles from
// dsep::reference. Verifies that outputs agree before reporting speedups.

#include <chrono>
#include <cstdio>
#include <cstdint>
#include <string>

#include <CLI11.hpp>

#include "dsep/centerpoint.hpp"
#include "dsep/generators.hpp"
#include "dsep/graph.hpp"
#include "dsep/parallel.hpp"
#include "dsep/reference.hpp"
#include "dsep/separator.hpp"

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch())
        .count();
}

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const double t0 = now_ms();
        f();
        best = std::min(best, now_ms() - t0);
    }
    return best;
}

void report(const char* name, double serial_ms, double parallel_ms, bool match) {
    std::printf("%-34s %10.2f ms %10.2f ms %8.2fx   %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, match ? "outputs match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernel comparison"};
    int n = 4000;
    double L = 60.0;
    std::uint64_t seed = 1;
    int trials = 64;
    int reps = 3;
    app.add_option("--n", n, "disk count for the random instance");
    app.add_option("--L", L, "square side length");
    app.add_option("--seed", seed, "rng seed");
    app.add_option("--trials", trials, "random directions for the trial kernel");
    app.add_option("--reps", reps, "timing repetitions (best-of)");
    CLI11_PARSE(app, argc, argv);

    const dsep::Instance inst = dsep::gen_random(n, L, seed, false, 0);
    std::printf("instance: n=%d L=%g seed=%llu, %d hardware threads\n\n", n, L,
                static_cast<unsigned long long>(seed), dsep::max_threads());
    std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        dsep::set_max_threads(1);
        dsep::IntersectionGraph ref;
        const double t_ref =
            time_best_of(reps, [&] { ref = dsep::reference::build_graph_bruteforce(inst); });
        dsep::IntersectionGraph fast;
        dsep::set_max_threads(0);
        const double t_par = time_best_of(reps, [&] { fast = dsep::build_graph(inst); });
        report("graph: brute force vs hash grid", t_ref, t_par, ref.edges == fast.edges);
    }
    {
        dsep::set_max_threads(1);
        dsep::IntersectionGraph a;
        const double t1 = time_best_of(reps, [&] { a = dsep::build_graph(inst); });
        dsep::set_max_threads(0);
        dsep::IntersectionGraph b;
        const double tp = time_best_of(reps, [&] { b = dsep::build_graph(inst); });
        report("graph: hash grid, 1 thread vs all", t1, tp, a.edges == b.edges);
    }
    {
        dsep::set_max_threads(1);
        std::vector<dsep::TrialOutcome> a;
        const double t1 = time_best_of(
            reps, [&] { a = dsep::random_trial_outcomes(inst, trials, seed, 2.0 / 3.0); });
        dsep::set_max_threads(0);
        std::vector<dsep::TrialOutcome> b;
        const double tp = time_best_of(
            reps, [&] { b = dsep::random_trial_outcomes(inst, trials, seed, 2.0 / 3.0); });
        bool match = a.size() == b.size();
        for (std::size_t i = 0; match && i < a.size(); ++i)
            match = a[i].angle == b[i].angle && a[i].crossings == b[i].crossings &&
                    a[i].offset == b[i].offset;
        report("random-slope trials", t1, tp, match);
    }
    {
        const dsep::Instance small = dsep::gen_random(std::min(n, 300), L / 4.0, seed, false, 0);
        dsep::set_max_threads(1);
        dsep::SeparatorResult a;
        const double t1 = time_best_of(reps, [&] { a = dsep::optimal_line_separator(small); });
        dsep::set_max_threads(0);
        dsep::SeparatorResult b;
        const double tp = time_best_of(reps, [&] { b = dsep::optimal_line_separator(small); });
        report("optimal separator (n<=300)", t1, tp,
               a.size() == b.size() && a.line.c == b.line.c);
    }
    {
        const dsep::Instance pts = dsep::gen_random(std::min(n, 500), L, seed, false, 0);
        dsep::set_max_threads(1);
        dsep::DepthReport a;
        const double t1 =
            time_best_of(reps, [&] { a = dsep::exact_centerpoint(pts.centers()); });
        dsep::set_max_threads(0);
        dsep::DepthReport b;
        const double tp =
            time_best_of(reps, [&] { b = dsep::exact_centerpoint(pts.centers()); });
        report("exact centerpoint (n<=500)", t1, tp,
               a.point.x == b.point.x && a.point.y == b.point.y && a.depth == b.depth);
    }
    dsep::set_max_threads(0);
    return 0;
}
