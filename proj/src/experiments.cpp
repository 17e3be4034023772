#include "dsep/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "dsep/centerpoint.hpp"
#include "dsep/generators.hpp"
#include "dsep/graph.hpp"
#include "dsep/io.hpp"
#include "dsep/rng.hpp"
#include "dsep/separator.hpp"

namespace dsep {

namespace {

constexpr std::uint64_t kInstanceTag = 0x696e7374;  // "inst"
constexpr std::uint64_t kDenseTag = 0x64656e73;     // "dens"
constexpr std::uint64_t kDisjointTag = 0x6469736a;  // "disj"
constexpr std::uint64_t kMedianTag = 0x6d656469;    // "medi"

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch())
        .count();
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    std::size_t b = s.find_last_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

std::vector<int> parse_int_list(const std::string& s, const std::string& where) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw input_error(where + ": bad integer '" + item + "'");
        }
    }
    if (out.empty()) throw input_error(where + ": empty list");
    return out;
}

void sort_canonical(std::vector<ResultRow>& rows) {
    std::sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
        return std::tie(a.algorithm, a.n, a.k, a.rep, a.instance) <
               std::tie(b.algorithm, b.n, b.k, b.rep, b.instance);
    });
}

ResultRow make_row(const std::string& instance, int n, std::int64_t m,
                   const SeparatorResult& r, int k, int rep, double wall_ms) {
    ResultRow row;
    row.instance = instance;
    row.n = n;
    row.m = m;
    row.algorithm = r.algorithm;
    row.k = k;
    row.rep = rep;
    row.size = r.size();
    row.left = r.left;
    row.right = r.right;
    row.wall_ms = wall_ms;
    return row;
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text, const std::string& name) {
    ExperimentConfig cfg;
    std::stringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw input_error(name + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const std::string where = name + ":" + std::to_string(lineno);
        auto as_int = [&] {
            try {
                return std::stoi(value);
            } catch (const std::exception&) {
                throw input_error(where + ": bad integer '" + value + "'");
            }
        };
        auto as_bool = [&] {
            if (value == "1" || value == "true") return true;
            if (value == "0" || value == "false") return false;
            throw input_error(where + ": bad boolean '" + value + "'");
        };
        if (key == "experiment") {
            cfg.experiment = value;
        } else if (key == "seed") {
            try {
                cfg.seed = std::stoull(value);
            } catch (const std::exception&) {
                throw input_error(where + ": bad seed '" + value + "'");
            }
            cfg.seed_set = true;
        } else if (key == "L") {
            try {
                cfg.L = std::stod(value);
            } catch (const std::exception&) {
                throw input_error(where + ": bad number '" + value + "'");
            }
        } else if (key == "n_min") {
            cfg.n_min = as_int();
        } else if (key == "n_max") {
            cfg.n_max = as_int();
        } else if (key == "n_step") {
            cfg.n_step = as_int();
        } else if (key == "ks") {
            cfg.ks = parse_int_list(value, where);
        } else if (key == "repetitions") {
            cfg.repetitions = as_int();
        } else if (key == "q_min") {
            cfg.q_min = as_int();
        } else if (key == "q_max") {
            cfg.q_max = as_int();
        } else if (key == "include_optimal") {
            cfg.include_optimal = as_bool();
        } else if (key == "max_rejects") {
            cfg.max_rejects = as_int();
        } else if (key == "out_csv") {
            cfg.out_csv = value;
        } else if (key == "out_svg") {
            cfg.out_svg = value;
        } else if (key == "out_json") {
            cfg.out_json = value;
        } else {
            throw input_error(where + ": unknown key '" + key + "'");
        }
    }
    if (cfg.experiment.empty()) throw input_error(name + ": missing 'experiment'");
    return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open config '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), path);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t instance_id, std::uint64_t k,
                          std::uint64_t rep) {
    return hash_seed({base, instance_id, k, rep});
}

void write_rows_csv(const std::string& path, std::vector<ResultRow> rows) {
    sort_canonical(rows);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot open '" + path + "' for writing");
    out << "instance,n,m,algorithm,k,rep,size,left,right,wall_ms\n";
    for (const ResultRow& r : rows) {
        char wall[32];
        std::snprintf(wall, sizeof(wall), "%.3f", r.wall_ms);
        out << r.instance << ',' << r.n << ',' << r.m << ',' << r.algorithm << ',' << r.k
            << ',' << r.rep << ',' << r.size << ',' << r.left << ',' << r.right << ','
            << wall << "\n";
    }
    if (!out) throw input_error("failed writing '" + path + "'");
}

std::vector<ResultRow> run_experiment1(const ExperimentConfig& cfg) {
    if (cfg.n_step < 1) throw input_error("exp1: n_step must be >= 1");
    if (cfg.repetitions < 1) throw input_error("exp1: repetitions must be >= 1");
    std::vector<ResultRow> rows;
    std::uint64_t idx = 0;
    for (int n = cfg.n_min; n <= cfg.n_max; n += cfg.n_step, ++idx) {
        const std::uint64_t inst_seed =
            hash_seed({cfg.seed, kInstanceTag, static_cast<std::uint64_t>(n)});
        const Instance inst = gen_random(n, cfg.L, inst_seed, true, cfg.max_rejects);
        const std::int64_t m = build_graph(inst).m();
        const std::string name = "random-n" + std::to_string(n);
        for (const int k : cfg.ks) {
            // group k: the single-slope separator is run k times per
            // repetition and consumers average the sizes (the estimator
            // tightens as k grows); one row per run, rep = rep*k + run
            for (int rep = 0; rep < cfg.repetitions; ++rep) {
                const std::uint64_t rep_seed =
                    derive_seed(cfg.seed, idx, static_cast<std::uint64_t>(k),
                                static_cast<std::uint64_t>(rep));
                for (int run = 0; run < k; ++run) {
                    const std::uint64_t seed =
                        hash_seed({rep_seed, static_cast<std::uint64_t>(run)});
                    const double t0 = now_ms();
                    const auto res = random_line_separator(inst, 1, seed);
                    const double wall = now_ms() - t0;
                    validate_result(*res, inst);
                    rows.push_back(make_row(name, n, m, *res, k, rep * k + run, wall));
                }
            }
        }
    }
    sort_canonical(rows);
    return rows;
}

void write_experiment1_svg(const std::string& path, const std::vector<ResultRow>& rows) {
    // average size per (n, k), one series per k
    std::map<int, std::map<int, std::pair<double, int>>> acc;  // k -> n -> (sum, count)
    std::map<std::pair<int, int>, std::int64_t> edge_count;    // (k, n) -> m
    for (const ResultRow& r : rows) {
        if (r.algorithm != "random") continue;
        auto& cell = acc[r.k][r.n];
        cell.first += r.size;
        cell.second += 1;
        edge_count[{r.k, r.n}] = r.m;
    }
    static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                     "#9467bd", "#ff7f0e", "#8c564b"};
    std::vector<SvgSeries> series;
    std::size_t color = 0;
    for (const auto& [k, by_n] : acc) {
        SvgSeries s;
        s.label = "k = " + std::to_string(k);
        s.color = kPalette[color++ % 6];
        for (const auto& [n, cell] : by_n) {
            const double avg = cell.first / cell.second;
            s.points.emplace_back(static_cast<double>(edge_count[{k, n}]),
                                  std::max(avg, 0.5));
        }
        series.push_back(std::move(s));
    }
    write_scatter_svg(path, "average separator size vs edges (random instances)",
                      "edges m", "average separator size", series);
}

std::vector<ResultRow> run_snake_experiment(const ExperimentConfig& cfg) {
    if (cfg.q_min < 3 || cfg.q_min % 2 == 0)
        throw input_error("snake: q_min must be odd and >= 3");
    if (cfg.repetitions < 1) throw input_error("snake: repetitions must be >= 1");
    std::vector<ResultRow> rows;
    for (int q = cfg.q_min; q <= cfg.q_max; q += 2) {
        const Instance inst = gen_snake(q);
        const std::int64_t m = build_graph(inst).m();
        const std::string name = "snake-q" + std::to_string(q);
        for (const int k : cfg.ks) {
            for (int rep = 0; rep < cfg.repetitions; ++rep) {
                // k = 0 in the derivation: trials are shared across k, so
                // the min over k trials is non-increasing in k per rep
                const std::uint64_t seed = derive_seed(
                    cfg.seed, static_cast<std::uint64_t>(q), 0,
                    static_cast<std::uint64_t>(rep));
                const double t0 = now_ms();
                const auto res = random_line_separator(inst, k, seed);
                const double wall = now_ms() - t0;
                validate_result(*res, inst);
                rows.push_back(make_row(name, inst.n(), m, *res, k, rep, wall));
            }
        }
        if (cfg.include_optimal) {
            const double t0 = now_ms();
            const SeparatorResult res = optimal_line_separator(inst);
            const double wall = now_ms() - t0;
            validate_result(res, inst);
            rows.push_back(make_row(name, inst.n(), m, res, 0, 0, wall));
        }
    }
    sort_canonical(rows);
    return rows;
}

Instance calibration_dense_instance(std::uint64_t seed, int n, int rep, double L) {
    return gen_random(n, L,
                      hash_seed({seed, kDenseTag, static_cast<std::uint64_t>(n),
                                 static_cast<std::uint64_t>(rep)}),
                      true, 1000);
}

Instance calibration_disjoint_instance(std::uint64_t seed, int n, int rep) {
    // side length 10n keeps the no-intersection probability near 1, so the
    // rejection loop stays short
    const double L = 10.0 * n;
    for (int attempt = 0; attempt < 500; ++attempt) {
        Instance inst = gen_random(
            n, L,
            hash_seed({seed, kDisjointTag, static_cast<std::uint64_t>(n),
                       static_cast<std::uint64_t>(rep), static_cast<std::uint64_t>(attempt)}),
            false, 0);
        if (build_graph(inst).m() == 0) return inst;
    }
    throw internal_error("calibration_disjoint_instance: rejection loop exhausted");
}

double median_crossings_through_point(const Instance& inst, Point point, int samples,
                                      std::uint64_t seed) {
    if (samples < 1) throw input_error("median_crossings_through_point: samples >= 1");
    std::vector<int> counts;
    counts.reserve(static_cast<std::size_t>(samples));
    for (int t = 0; t < samples; ++t) {
        SplitMix64 g(hash_seed({seed, kMedianTag, static_cast<std::uint64_t>(t)}));
        const double angle = std::numbers::pi * g.u01();
        const Line line = Line::through_point(angle, point);
        int crossings = 0;
        for (const Disk& d : inst.disks)
            crossings += (side_from_projection(line.nx * d.cx + line.ny * d.cy, d.r,
                                               line.c) == SideClass::Crossed);
        counts.push_back(crossings);
    }
    std::sort(counts.begin(), counts.end());
    const std::size_t mid = counts.size() / 2;
    if (counts.size() % 2 == 1) return counts[mid];
    return 0.5 * (counts[mid - 1] + counts[mid]);
}

Calibration calibrate_constants(std::uint64_t seed, const CalibrationFamilies& fam) {
    Calibration cal;
    cal.seed = seed;

    double worst_general = 0.0;
    for (const int n : fam.dense_n) {
        for (int rep = 0; rep < fam.dense_per_n; ++rep) {
            const Instance inst = calibration_dense_instance(seed, n, rep, fam.dense_L);
            const std::int64_t m = build_graph(inst).m();
            const DepthReport cp = exact_centerpoint(inst.centers());
            const double med = median_crossings_through_point(
                inst, cp.point, fam.samples,
                hash_seed({seed, kDenseTag, static_cast<std::uint64_t>(n),
                           static_cast<std::uint64_t>(rep), 7}));
            const double bound =
                std::sqrt(static_cast<double>(m + n) * std::log(static_cast<double>(n)));
            worst_general = std::max(worst_general, med / bound);
        }
    }
    cal.c_general = fam.safety * worst_general;

    double worst_disjoint = 0.0;
    for (const int n : fam.disjoint_n) {
        for (int rep = 0; rep < fam.disjoint_per_n; ++rep) {
            const Instance inst = calibration_disjoint_instance(seed, n, rep);
            const DepthReport cp = exact_centerpoint(inst.centers());
            const double med = median_crossings_through_point(
                inst, cp.point, fam.samples,
                hash_seed({seed, kDisjointTag, static_cast<std::uint64_t>(n),
                           static_cast<std::uint64_t>(rep), 7}));
            worst_disjoint = std::max(worst_disjoint, med / std::sqrt(n));
        }
    }
    cal.c_disjoint = fam.safety * worst_disjoint;

    std::uint64_t fp = hash_seed({seed, static_cast<std::uint64_t>(fam.dense_n.size()),
                                  static_cast<std::uint64_t>(fam.disjoint_n.size()),
                                  static_cast<std::uint64_t>(fam.dense_per_n),
                                  static_cast<std::uint64_t>(fam.disjoint_per_n),
                                  static_cast<std::uint64_t>(fam.samples)});
    for (const int n : fam.dense_n) fp = hash_seed({fp, static_cast<std::uint64_t>(n)});
    for (const int n : fam.disjoint_n) fp = hash_seed({fp, static_cast<std::uint64_t>(n)});
    cal.fingerprint = fp;
    return cal;
}

std::string calibration_json(const Calibration& c) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"c_general\": " << format_double(c.c_general) << ",\n";
    out << "  \"c_disjoint\": " << format_double(c.c_disjoint) << ",\n";
    out << "  \"fingerprint\": " << c.fingerprint << ",\n";
    out << "  \"seed\": " << c.seed << "\n";
    out << "}\n";
    return out.str();
}

void run_bench_config(const ExperimentConfig& cfg) {
    if (!cfg.seed_set) throw input_error("bench config must set 'seed'");
    if (cfg.experiment == "exp1") {
        if (cfg.out_csv.empty()) throw input_error("exp1 config must set 'out_csv'");
        const std::vector<ResultRow> rows = run_experiment1(cfg);
        write_rows_csv(cfg.out_csv, rows);
        if (!cfg.out_svg.empty()) write_experiment1_svg(cfg.out_svg, rows);
    } else if (cfg.experiment == "snake") {
        if (cfg.out_csv.empty()) throw input_error("snake config must set 'out_csv'");
        write_rows_csv(cfg.out_csv, run_snake_experiment(cfg));
    } else if (cfg.experiment == "calibrate") {
        if (cfg.out_json.empty()) throw input_error("calibrate config must set 'out_json'");
        std::ofstream out(cfg.out_json, std::ios::binary);
        if (!out) throw input_error("cannot open '" + cfg.out_json + "' for writing");
        out << calibration_json(calibrate_constants(cfg.seed));
    } else {
        throw input_error("unknown experiment '" + cfg.experiment + "'");
    }
}

}  // namespace dsep
