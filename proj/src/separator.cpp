#include "dsep/separator.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <unordered_set>
#include <vector>

#include "dsep/graph.hpp"
#include "dsep/parallel.hpp"
#include "dsep/rng.hpp"

namespace dsep {

namespace {

constexpr double kPi = std::numbers::pi;

// Arbitrary fixed slope, appended so the candidate set is never empty.
const double kFallbackAngle = std::atan(1.0 / kPi);

double mod_pi(double a) {
    a = std::fmod(a, kPi);
    if (a < 0.0) a += kPi;
    return a;
}

double trial_angle(std::uint64_t seed, int trial) {
    SplitMix64 g(hash_seed({seed, static_cast<std::uint64_t>(trial)}));
    return kPi * g.u01();
}

struct SweepBest {
    int crossings = std::numeric_limits<int>::max();
    double offset = 0.0;
    bool feasible = false;
};

// Minimum-crossing balanced offset for one direction. The crossing and side
// counts are piecewise constant between the projection events t_j +- r_j, so
// the events themselves plus one probe per gap (and one beyond each end)
// cover every combinatorially distinct line of this slope. Ties keep the
// smallest offset.
SweepBest sweep_slope(const Instance& inst, double angle, int cap,
                      std::vector<double>& enter, std::vector<double>& exit) {
    const std::size_t n = inst.disks.size();
    enter.resize(n);
    exit.resize(n);
    const double ux = -std::sin(angle);
    const double uy = std::cos(angle);
    bool uniform = true;
    const double r0 = inst.disks.front().r;
    for (std::size_t i = 0; i < n; ++i) {
        const Disk& d = inst.disks[i];
        enter[i] = ux * d.cx + uy * d.cy;  // raw projection for now
        uniform &= (d.r == r0);
    }
    if (uniform) {
        // t -> t - r and t -> t + r round monotonically, so sorting the
        // projections once orders both event arrays; the values stay the
        // per-disk fl(t +- r) that classification compares against
        std::sort(enter.begin(), enter.end());
        for (std::size_t i = 0; i < n; ++i) {
            const double t = enter[i];
            enter[i] = t - r0;
            exit[i] = t + r0;
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            const double t = enter[i];
            const double r = inst.disks[i].r;
            enter[i] = t - r;
            exit[i] = t + r;
        }
        std::sort(enter.begin(), enter.end());
        std::sort(exit.begin(), exit.end());
    }

    SweepBest best;
    const int ni = static_cast<int>(n);
    auto consider = [&](double t, int entered, int exited) {
        const int left = exited;
        const int right = ni - entered;
        if (left > cap || right > cap) return;
        const int crossed = entered - exited;
        if (crossed < best.crossings) best = {crossed, t, true};
    };

    consider(enter.front() - 1.0, 0, 0);
    std::size_t ia = 0, ib = 0;
    int entered = 0, exited = 0;
    while (ia < n || ib < n) {
        const double e = (ia < n && (ib >= n || enter[ia] <= exit[ib])) ? enter[ia] : exit[ib];
        while (ia < n && enter[ia] == e) {
            ++ia;
            ++entered;  // disk becomes crossed at its lower event
        }
        consider(e, entered, exited);
        while (ib < n && exit[ib] == e) {
            ++ib;
            ++exited;  // disk stops crossing strictly after its upper event
        }
        double next;
        if (ia < n && (ib >= n || enter[ia] <= exit[ib]))
            next = enter[ia];
        else if (ib < n)
            next = exit[ib];
        else
            next = e + 2.0;
        const double mid = 0.5 * (e + next);
        // sub-ulp gaps have no representable interior offset; probing them
        // would report counts no realizable line achieves
        if (mid > e && mid < next) consider(mid, entered, exited);
    }
    return best;
}

SeparatorResult materialize(const Instance& inst, const Line& line, double alpha,
                            std::string algorithm, int trials_used) {
    Classification cls = classify_all(line, inst);
    SeparatorResult r;
    r.line = line;
    r.crossed = std::move(cls.crossed);
    r.left = cls.left;
    r.right = cls.right;
    r.alpha = alpha;
    r.algorithm = std::move(algorithm);
    r.trials_used = trials_used;
    assert(static_cast<int>(r.crossed.size()) + r.left + r.right == inst.n());
    return r;
}

void check_alpha(double alpha) {
    if (!(alpha >= 0.5 && alpha <= 1.0))
        throw input_error("balance parameter alpha must lie in [1/2, 1]");
}

std::optional<SeparatorResult> best_line_for_slope_unchecked(const Instance& inst,
                                                             double angle, double alpha,
                                                             std::vector<double>& enter,
                                                             std::vector<double>& exit) {
    const int cap = balance_cap(alpha, inst.n());
    const SweepBest b = sweep_slope(inst, angle, cap, enter, exit);
    if (!b.feasible) return std::nullopt;
    return materialize(inst, Line::from_angle(angle, b.offset), alpha, "sweep", 1);
}

// Exact dedup key for the quantities that generate a pair's candidate
// directions. Grid-like instances repeat the same center difference many
// times; hashing the bit patterns collapses them without tolerance games.
struct PairKey {
    std::array<std::uint64_t, 4> bits;
    bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const {
        std::uint64_t h = 0x51ed270b35a7f4cdULL;
        for (std::uint64_t b : k.bits) h = mix64(h ^ b);
        return static_cast<std::size_t>(h);
    }
};

}  // namespace

int balance_cap(double alpha, int n) {
    // tolerate the floating-point image of rational alpha (0.8 * 5 is a hair
    // above 4)
    return static_cast<int>(std::ceil(alpha * static_cast<double>(n) - 1e-9));
}

void validate_result(const SeparatorResult& r, const Instance& inst) {
    const Classification cls = classify_all(r.line, inst);
    if (cls.crossed != r.crossed || cls.left != r.left || cls.right != r.right)
        throw internal_error("separator result disagrees with classification");
    if (static_cast<int>(r.crossed.size()) + r.left + r.right != inst.n())
        throw internal_error("separator result is not a partition");
    const int cap = balance_cap(r.alpha, inst.n());
    if (r.left > cap || r.right > cap)
        throw internal_error("separator result violates its balance certificate");
}

std::optional<SeparatorResult> best_line_for_slope(const Instance& inst, double angle,
                                                   double alpha) {
    if (inst.n() < 1) throw input_error("best_line_for_slope: empty instance");
    if (!std::isfinite(angle)) throw input_error("best_line_for_slope: angle must be finite");
    check_alpha(alpha);
    validate_instance(inst);
    std::vector<double> enter, exit;
    return best_line_for_slope_unchecked(inst, angle, alpha, enter, exit);
}

std::vector<TrialOutcome> random_trial_outcomes(const Instance& inst, int trials,
                                                std::uint64_t seed, double alpha) {
    if (inst.n() < 1) throw input_error("random_trial_outcomes: empty instance");
    if (trials < 1) throw input_error("random_trial_outcomes: trials must be >= 1");
    check_alpha(alpha);
    validate_instance(inst);

    const int cap = balance_cap(alpha, inst.n());
    std::vector<TrialOutcome> out(static_cast<std::size_t>(trials));
#pragma omp parallel num_threads(max_threads())
    {
        std::vector<double> enter, exit;
#pragma omp for schedule(dynamic, 4)
        for (int t = 0; t < trials; ++t) {
            const double angle = trial_angle(seed, t);
            const SweepBest b = sweep_slope(inst, angle, cap, enter, exit);
            out[static_cast<std::size_t>(t)] = {angle, b.offset,
                                                b.feasible ? b.crossings : -1, b.feasible};
        }
    }
    return out;
}

std::optional<SeparatorResult> random_line_separator(const Instance& inst, int trials,
                                                     std::uint64_t seed, double alpha) {
    const std::vector<TrialOutcome> outcomes = random_trial_outcomes(inst, trials, seed, alpha);
    int best = -1;
    for (int t = 0; t < trials; ++t) {
        const TrialOutcome& o = outcomes[static_cast<std::size_t>(t)];
        if (!o.feasible) continue;
        if (best < 0 || o.crossings < outcomes[static_cast<std::size_t>(best)].crossings)
            best = t;
    }
    if (best < 0) {
        // a line through a centerpoint of the centers is always balanced at
        // alpha >= 2/3, so every slope admits a feasible offset
        if (alpha >= 2.0 / 3.0 - 1e-12)
            throw internal_error("random_line_separator: no feasible trial at alpha >= 2/3");
        return std::nullopt;
    }
    const TrialOutcome& o = outcomes[static_cast<std::size_t>(best)];
    SeparatorResult r = materialize(inst, Line::from_angle(o.angle, o.offset), alpha,
                                    "random", trials);
    assert(r.size() == o.crossings);
    return r;
}

SeparatorResult line_through_point_separator(const Instance& inst, Point point, int trials,
                                             std::uint64_t seed,
                                             std::optional<double> threshold) {
    if (inst.n() < 1) throw input_error("line_through_point_separator: empty instance");
    if (trials < 1) throw input_error("line_through_point_separator: trials must be >= 1");
    if (!std::isfinite(point.x) || !std::isfinite(point.y))
        throw input_error("line_through_point_separator: point must be finite");
    validate_instance(inst);

    int best_cross = std::numeric_limits<int>::max();
    double best_angle = 0.0;
    int used = trials;
    for (int t = 0; t < trials; ++t) {
        const double angle = trial_angle(seed, t);
        const Line line = Line::through_point(angle, point);
        int crossings = 0;
        for (const Disk& d : inst.disks)
            crossings += (side_from_projection(line.nx * d.cx + line.ny * d.cy, d.r,
                                               line.c) == SideClass::Crossed);
        if (crossings < best_cross) {
            best_cross = crossings;
            best_angle = angle;
        }
        if (threshold && static_cast<double>(best_cross) <= *threshold) {
            used = t + 1;
            break;
        }
    }
    return materialize(inst, Line::through_point(best_angle, point), 2.0 / 3.0,
                       "centerpoint", used);
}

SeparatorResult axis_parallel_separator(const Instance& inst) {
    const int n = inst.n();
    if (n < 1) throw input_error("axis_parallel_separator: empty instance");
    validate_instance(inst);
    const double alpha = 4.0 / 5.0;

    if (n < 5) {
        // too few points for quantile lines; direct sweep over both axes
        std::vector<double> enter, exit;
        auto h = best_line_for_slope_unchecked(inst, 0.0, alpha, enter, exit);
        auto v = best_line_for_slope_unchecked(inst, kPi / 2.0, alpha, enter, exit);
        assert(h && v);
        SeparatorResult r = (v->size() < h->size()) ? std::move(*v) : std::move(*h);
        r.algorithm = "axis";
        return r;
    }

    auto sorted_coords = [&](bool vertical) {
        std::vector<std::pair<double, int>> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const Disk& d = inst.disks[static_cast<std::size_t>(i)];
            v[static_cast<std::size_t>(i)] = {vertical ? d.cx : d.cy, i};
        }
        std::sort(v.begin(), v.end());
        return v;
    };
    // Line strictly between ranks q and q+1 when the coordinates differ,
    // else through the tied coordinate (tie order is (coordinate, id)).
    auto between = [](const std::pair<double, int>& a, const std::pair<double, int>& b) {
        return a.first < b.first ? 0.5 * (a.first + b.first) : a.first;
    };

    const int q = n / 5;
    const auto ys = sorted_coords(false);
    const auto xs = sorted_coords(true);
    const double yd = between(ys[static_cast<std::size_t>(q - 1)],
                              ys[static_cast<std::size_t>(q)]);
    const double yu = between(ys[static_cast<std::size_t>(n - q - 1)],
                              ys[static_cast<std::size_t>(n - q)]);
    const double xl = between(xs[static_cast<std::size_t>(q - 1)],
                              xs[static_cast<std::size_t>(q)]);
    const double xr = between(xs[static_cast<std::size_t>(n - q - 1)],
                              xs[static_cast<std::size_t>(n - q)]);

    struct Cand {
        bool vertical;
        double coord;
        int crossings;
    };
    std::vector<Cand> cands;

    // Unit-spaced candidates inside the quantile rectangle; each disk meets
    // at most ~2r+1 consecutive ones per orientation, so counting is O(n)
    // for unit disks. A side narrower than 2 keeps only the midline.
    auto add_orientation = [&](bool vertical, double lo, double hi) {
        const double span = hi - lo;
        if (span >= 2.0) {
            const int k = static_cast<int>(std::ceil(span - 1.0));
            std::vector<int> counts(static_cast<std::size_t>(k), 0);
            for (const Disk& d : inst.disks) {
                const double base = (vertical ? d.cx : d.cy) - lo;
                int a = static_cast<int>(std::ceil(base - d.r));
                int b = static_cast<int>(std::floor(base + d.r));
                a = std::max(a, 1);
                b = std::min(b, k);
                for (int i = a; i <= b; ++i) ++counts[static_cast<std::size_t>(i - 1)];
            }
            for (int i = 1; i <= k; ++i)
                cands.push_back({vertical, lo + static_cast<double>(i),
                                 counts[static_cast<std::size_t>(i - 1)]});
        } else {
            const double mid = 0.5 * (lo + hi);
            int c = 0;
            for (const Disk& d : inst.disks)
                c += (side_from_projection(vertical ? d.cx : d.cy, d.r, mid) ==
                      SideClass::Crossed);
            cands.push_back({vertical, mid, c});
        }
    };
    add_orientation(false, yd, yu);
    add_orientation(true, xl, xr);

    std::size_t pick = 0;
    for (std::size_t i = 1; i < cands.size(); ++i)
        if (cands[i].crossings < cands[pick].crossings) pick = i;

    const Line line = cands[pick].vertical ? Line(1.0, 0.0, cands[pick].coord)
                                           : Line(0.0, 1.0, cands[pick].coord);
    return materialize(inst, line, alpha, "axis", 1);
}

SeparatorResult optimal_line_separator(const Instance& inst, double alpha) {
    const int n = inst.n();
    if (n < 1) throw input_error("optimal_line_separator: empty instance");
    check_alpha(alpha);
    validate_instance(inst);
    const int cap = balance_cap(alpha, n);

    // Crossing floor: when the balance cap forces both sides nonempty, a
    // crossing-free line would disconnect the intersection graph. Lets the
    // angle scan stop as soon as the floor is reached.
    int floor_crossings = 0;
    if (cap < n && is_connected(build_graph(inst))) floor_crossings = 1;

    // Directions where the sorted projection events can reorder: for each
    // center pair, the bitangent directions (normal . diff = +-(ri+rj),
    // +-(ri-rj)) plus the direction perpendicular to the difference.
    std::unordered_set<PairKey, PairKeyHash> seen;
    std::vector<double> angles;
    angles.reserve(1024);
    for (int i = 0; i < n; ++i) {
        const Disk& di = inst.disks[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) {
            const Disk& dj = inst.disks[static_cast<std::size_t>(j)];
            double dx = dj.cx - di.cx;
            double dy = dj.cy - di.cy;
            if (dx == 0.0 && dy == 0.0) continue;  // concentric pair
            if (dx < 0.0 || (dx == 0.0 && dy < 0.0)) {
                dx = -dx;
                dy = -dy;
            }
            const double rsum = di.r + dj.r;
            const double rdiff = std::abs(di.r - dj.r);
            const PairKey key{{std::bit_cast<std::uint64_t>(dx),
                               std::bit_cast<std::uint64_t>(dy),
                               std::bit_cast<std::uint64_t>(rsum),
                               std::bit_cast<std::uint64_t>(rdiff)}};
            if (!seen.insert(key).second) continue;

            const double d = std::hypot(dx, dy);
            const double phi = std::atan2(dy, dx);
            angles.push_back(mod_pi(phi + kPi / 2.0));
            for (const double s : {rdiff, -rdiff, rsum, -rsum}) {
                if (std::abs(s) > d) continue;
                const double beta = std::acos(std::clamp(s / d, -1.0, 1.0));
                angles.push_back(mod_pi(phi + beta + kPi / 2.0));
                angles.push_back(mod_pi(phi - beta + kPi / 2.0));
            }
        }
    }
    angles.push_back(kFallbackAngle);
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end()), angles.end());

    // The minimum for a fixed direction is constant between consecutive
    // critical angles but can be strictly smaller there than at either
    // endpoint, so probe each gap as well (the angle space is circular with
    // period pi).
    std::vector<double> cands;
    cands.reserve(angles.size() * 2);
    for (std::size_t i = 0; i < angles.size(); ++i) {
        cands.push_back(angles[i]);
        const double next = (i + 1 < angles.size()) ? angles[i + 1] : angles[0] + kPi;
        cands.push_back(mod_pi(0.5 * (angles[i] + next)));
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    // Scan in bit-reversed order: any fixed order is reproducible, and this
    // one spreads probes across the circle so the crossing-floor early exit
    // fires after O(1/window) candidates instead of half the list when the
    // optimal directions form a narrow window.
    const std::int64_t total = static_cast<std::int64_t>(cands.size());
    int bits = 0;
    while ((std::int64_t{1} << bits) < total) ++bits;
    std::vector<std::int64_t> order;
    order.reserve(static_cast<std::size_t>(total));
    for (std::int64_t p = 0; p < (std::int64_t{1} << bits); ++p) {
        std::int64_t idx = 0;
        for (int b = 0; b < bits; ++b) idx |= ((p >> b) & 1) << (bits - 1 - b);
        if (idx < total) order.push_back(idx);
    }

    constexpr std::int64_t kBlock = 4096;
    int best_cross = std::numeric_limits<int>::max();
    double best_offset = 0.0;
    std::int64_t best_idx = -1;
    std::int64_t processed = 0;

    std::vector<int> block_cross(static_cast<std::size_t>(kBlock));
    std::vector<double> block_off(static_cast<std::size_t>(kBlock));
    for (std::int64_t start = 0; start < total; start += kBlock) {
        const std::int64_t end = std::min(start + kBlock, total);
#pragma omp parallel num_threads(max_threads())
        {
            std::vector<double> enter, exit;
#pragma omp for schedule(dynamic, 16)
            for (std::int64_t p = start; p < end; ++p) {
                const std::size_t idx = static_cast<std::size_t>(order[static_cast<std::size_t>(p)]);
                const SweepBest b = sweep_slope(inst, cands[idx], cap, enter, exit);
                block_cross[static_cast<std::size_t>(p - start)] =
                    b.feasible ? b.crossings : -1;
                block_off[static_cast<std::size_t>(p - start)] = b.offset;
            }
        }
        for (std::int64_t p = start; p < end; ++p) {
            const int cr = block_cross[static_cast<std::size_t>(p - start)];
            if (cr >= 0 && cr < best_cross) {
                best_cross = cr;
                best_offset = block_off[static_cast<std::size_t>(p - start)];
                best_idx = order[static_cast<std::size_t>(p)];
            }
        }
        processed = end;
        if (best_idx >= 0 && best_cross <= floor_crossings) break;
    }

    if (best_idx < 0)
        throw input_error("optimal_line_separator: no direction admits a balanced line");
    SeparatorResult r = materialize(
        inst, Line::from_angle(cands[static_cast<std::size_t>(best_idx)], best_offset),
        alpha, "optimal", static_cast<int>(std::min<std::int64_t>(
                              processed, std::numeric_limits<int>::max())));
    assert(r.size() == best_cross);
    return r;
}

}  // namespace dsep
