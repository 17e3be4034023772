#include "dsep/cli.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dsep/centerpoint.hpp"
#include "dsep/experiments.hpp"
#include "dsep/generators.hpp"
#include "dsep/graph.hpp"
#include "dsep/io.hpp"
#include "dsep/separator.hpp"

namespace dsep {

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch())
        .count();
}

void emit_record(const SeparatorResult& res, const Instance& inst, double wall_ms,
                 const std::string& out_path) {
    const std::int64_t m = build_graph(inst).m();
    const std::string record = separator_record_json(res, inst.n(), m, wall_ms);
    std::cout << record;
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw input_error("cannot open '" + out_path + "' for writing");
        out << record;
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"balanced line separators for disk intersection graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance file");
    std::string gen_family;
    std::string gen_out;
    int gen_n = 100;
    std::int64_t gen_m = 0;
    double gen_L = 25.0;
    std::uint64_t gen_seed = 0;
    bool gen_disconnected_ok = false;
    int gen_max_rejects = 1000;
    int gen_q = 11;
    int gen_levels = 4;
    double gen_eps = -1.0;
    gen->add_option("--family", gen_family, "random | snake | rings | nested")
        ->required()
        ->check(CLI::IsMember({"random", "snake", "rings", "nested"}));
    gen->add_option("--out", gen_out, "output instance file")->required();
    gen->add_option("--n", gen_n, "disk count (random, rings)");
    gen->add_option("--m", gen_m, "requested edge count (rings)");
    gen->add_option("--L", gen_L, "square side length (random)");
    gen->add_option("--seed", gen_seed, "rng seed (random)");
    gen->add_flag("--disconnected-ok", gen_disconnected_ok,
                  "keep the first draw even if disconnected (random)");
    gen->add_option("--max-rejects", gen_max_rejects,
                    "rejection budget for connectivity (random)");
    gen->add_option("--q", gen_q, "snake parameter (odd, >= 3)");
    gen->add_option("--levels", gen_levels, "levels (nested)");
    gen->add_option("--eps", gen_eps, "shrink/clearance epsilon (rings, nested)");

    // sep
    auto* sep = app.add_subcommand("sep", "run a separator algorithm on an instance");
    std::string sep_in, sep_out, sep_algo = "random";
    double sep_alpha = 2.0 / 3.0;
    int sep_trials = 20;
    std::uint64_t sep_seed = 0;
    double sep_angle = 0.0;
    bool sep_angle_set = false;
    double sep_threshold = -1.0;
    sep->add_option("--in", sep_in, "instance file")->required();
    sep->add_option("--algo", sep_algo, "random | centerpoint | axis | slope")
        ->check(CLI::IsMember({"random", "centerpoint", "axis", "slope"}));
    sep->add_option("--alpha", sep_alpha, "balance parameter (random, slope)");
    sep->add_option("--trials", sep_trials, "random directions to try");
    sep->add_option("--seed", sep_seed, "rng seed");
    sep->add_option("--angle", sep_angle, "line direction in radians (slope)")
        ->each([&](const std::string&) { sep_angle_set = true; });
    sep->add_option("--threshold", sep_threshold,
                    "stop at the first trial at or below this size (centerpoint)");
    sep->add_option("--out", sep_out, "also write the record to this file");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exact minimum-size balanced line separator");
    std::string oracle_in, oracle_out;
    double oracle_alpha = 2.0 / 3.0;
    oracle->add_option("--in", oracle_in, "instance file")->required();
    oracle->add_option("--alpha", oracle_alpha, "balance parameter");
    oracle->add_option("--out", oracle_out, "also write the record to this file");

    // bench
    auto* bench = app.add_subcommand("bench", "run an experiment from a config file");
    std::string bench_config;
    bench->add_option("--config", bench_config, "config file (key = value lines)")
        ->required();

    // calibrate
    auto* calibrate =
        app.add_subcommand("calibrate", "fit the empirical separator-size constants");
    std::uint64_t cal_seed = 0;
    std::string cal_out;
    calibrate->add_option("--seed", cal_seed, "rng seed")->required();
    calibrate->add_option("--out", cal_out, "also write the record to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            Instance inst;
            if (gen_family == "random") {
                inst = gen_random(gen_n, gen_L, gen_seed, !gen_disconnected_ok,
                                  gen_max_rejects);
            } else if (gen_family == "snake") {
                inst = gen_snake(gen_q);
            } else if (gen_family == "rings") {
                if (gen_m <= 0) throw input_error("gen rings: --m is required");
                const double eps = gen_eps > 0.0 ? gen_eps : default_ring_eps();
                inst = gen_rings(gen_n, gen_m, eps).first;
            } else {
                const double eps = gen_eps > 0.0 ? gen_eps : 0.01;
                inst = gen_nested_disks(gen_levels, eps);
            }
            write_instance(gen_out, inst);
            std::cout << "wrote " << inst.n() << " disks to " << gen_out << "\n";
        } else if (sep->parsed()) {
            const Instance inst = read_instance(sep_in);
            const double t0 = now_ms();
            std::optional<SeparatorResult> res;
            if (sep_algo == "random") {
                res = random_line_separator(inst, sep_trials, sep_seed, sep_alpha);
            } else if (sep_algo == "centerpoint") {
                const DepthReport cp = exact_centerpoint(inst.centers());
                std::optional<double> threshold;
                if (sep_threshold >= 0.0) threshold = sep_threshold;
                res = line_through_point_separator(inst, cp.point, sep_trials, sep_seed,
                                                   threshold);
            } else if (sep_algo == "axis") {
                res = axis_parallel_separator(inst);
            } else {
                if (!sep_angle_set) throw input_error("sep --algo slope requires --angle");
                res = best_line_for_slope(inst, sep_angle, sep_alpha);
            }
            const double wall = now_ms() - t0;
            if (!res) {
                std::cerr << "infeasible: no balanced line for the requested slope/alpha\n";
                return 1;
            }
            validate_result(*res, inst);
            emit_record(*res, inst, wall, sep_out);
        } else if (oracle->parsed()) {
            const Instance inst = read_instance(oracle_in);
            const double t0 = now_ms();
            const SeparatorResult res = optimal_line_separator(inst, oracle_alpha);
            const double wall = now_ms() - t0;
            validate_result(res, inst);
            emit_record(res, inst, wall, oracle_out);
        } else if (bench->parsed()) {
            run_bench_config(parse_config_file(bench_config));
        } else if (calibrate->parsed()) {
            const std::string record = calibration_json(calibrate_constants(cal_seed));
            std::cout << record;
            if (!cal_out.empty()) {
                std::ofstream out(cal_out, std::ios::binary);
                if (!out) throw input_error("cannot open '" + cal_out + "' for writing");
                out << record;
            }
        }
        return 0;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace dsep
