#pragma once

#include <string>
#include <vector>

#include "dsep/geometry.hpp"
#include "dsep/separator.hpp"

namespace dsep {

// Instance files: optional '#'-prefixed provenance comments, a literal
// "id,x,y,r" header, then one disk per line. Doubles carry 17 significant
// digits so a write/read round trip is exact; line endings are LF.
void write_instance(const std::string& path, const Instance& inst);
Instance read_instance(const std::string& path);

std::string format_double(double v);  // %.17g

// Small key-value record for a single separator run (JSON).
std::string separator_record_json(const SeparatorResult& r, int n, std::int64_t m,
                                  double wall_ms);

struct SvgSeries {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> points;
};

// Dependency-free log-log scatter with decade ticks.
void write_scatter_svg(const std::string& path, const std::string& title,
                       const std::string& x_label, const std::string& y_label,
                       const std::vector<SvgSeries>& series);

}  // namespace dsep
