#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsep/geometry.hpp"

namespace dsep {

// A balanced line separator: the crossed disks are the separator, the two
// open halfplanes hold at most ceil(alpha * n) fully contained disks each.
struct SeparatorResult {
    Line line;
    std::vector<int> crossed;
    int left = 0;
    int right = 0;
    double alpha = 2.0 / 3.0;
    std::string algorithm;
    int trials_used = 0;

    int size() const { return static_cast<int>(crossed.size()); }
};

// ceil(alpha * n) with slack for the floating-point image of rational alpha
// (2/3, 4/5, ...).
int balance_cap(double alpha, int n);

// Throws internal_error unless `r` is a valid partition of `inst` with both
// open sides within the balance cap.
void validate_result(const SeparatorResult& r, const Instance& inst);

// Among all lines of direction `angle`, one minimizing the number of crossed
// disks subject to both open sides holding <= ceil(alpha*n) disks. Sweeps the
// 2n projection events plus the gaps between them, O(n log n). nullopt when
// no offset is balanced at this slope (possible for alpha near 1/2).
std::optional<SeparatorResult> best_line_for_slope(const Instance& inst, double angle,
                                                   double alpha);

// Outcome of one sampled slope; exposed so experiment drivers can take
// prefix minima over a nested trial schedule.
struct TrialOutcome {
    double angle = 0.0;
    double offset = 0.0;
    int crossings = -1;
    bool feasible = false;
};

// Trial t draws its angle from hash(seed, t), so the first k outcomes do not
// depend on how many trials follow them.
std::vector<TrialOutcome> random_trial_outcomes(const Instance& inst, int trials,
                                                std::uint64_t seed, double alpha);

// Best balanced per-slope separator over `trials` random slopes (ties go to
// the lowest trial index). Deterministic given the seed, independent of the
// thread count. nullopt only if every trial is infeasible, which cannot
// happen for alpha >= 2/3.
std::optional<SeparatorResult> random_line_separator(const Instance& inst, int trials,
                                                     std::uint64_t seed,
                                                     double alpha = 2.0 / 3.0);

// Random lines pinned through `point` (typically an exact centerpoint of the
// centers, which makes every sampled line balanced). Returns the first trial
// with crossings <= threshold when given, otherwise the best over all
// trials.
SeparatorResult line_through_point_separator(const Instance& inst, Point point, int trials,
                                             std::uint64_t seed,
                                             std::optional<double> threshold = {});

// Axis-parallel 4/5-balanced separator: quantile lines bound a center
// rectangle, integer-spaced candidate lines inside it are scored in O(n)
// total (each disk meets at most ~2r+1 consecutive candidates per
// orientation), and the best candidate wins.
SeparatorResult axis_parallel_separator(const Instance& inst);

// Globally minimum-size balanced line separator. Enumerates every direction
// where the projection event order can change (bitangent directions plus the
// direction perpendicular to each center difference), evaluates those angles
// and the gaps between them, and takes the overall best. Intended for
// moderate n; the angle scan is O(n^2) sweeps in the worst case.
SeparatorResult optimal_line_separator(const Instance& inst, double alpha = 2.0 / 3.0);

}  // namespace dsep
