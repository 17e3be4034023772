#include "dsep/geometry.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

#include "dsep/parallel.hpp"

namespace dsep {

Line::Line(double nx_, double ny_, double c_) : nx(nx_), ny(ny_), c(c_) {
    if (!std::isfinite(nx) || !std::isfinite(ny) || !std::isfinite(c))
        throw input_error("Line: components must be finite");
    const double nrm = nx * nx + ny * ny;
    if (std::abs(nrm - 1.0) > 1e-12)
        throw input_error("Line: normal must have unit length");
}

Line Line::from_angle(double direction, double offset) {
    if (!std::isfinite(direction) || !std::isfinite(offset))
        throw input_error("Line::from_angle: non-finite input");
    return Line(-std::sin(direction), std::cos(direction), offset);
}

Line Line::through_point(double direction, Point p) {
    const double nx = -std::sin(direction);
    const double ny = std::cos(direction);
    return Line(nx, ny, nx * p.x + ny * p.y);
}

double Instance::min_radius() const {
    double r = std::numeric_limits<double>::infinity();
    for (const Disk& d : disks) r = std::min(r, d.r);
    return r;
}

double Instance::max_radius() const {
    double r = 0.0;
    for (const Disk& d : disks) r = std::max(r, d.r);
    return r;
}

std::vector<Point> Instance::centers() const {
    std::vector<Point> out;
    out.reserve(disks.size());
    for (const Disk& d : disks) out.push_back({d.cx, d.cy});
    return out;
}

void validate_instance(const Instance& inst) {
    for (std::size_t i = 0; i < inst.disks.size(); ++i) {
        const Disk& d = inst.disks[i];
        if (d.id != static_cast<int>(i))
            throw input_error("instance: disk ids must be the sequence 0..n-1");
        if (!std::isfinite(d.cx) || !std::isfinite(d.cy) || !std::isfinite(d.r))
            throw input_error("instance: disk fields must be finite");
        if (!(d.r > 0.0)) throw input_error("instance: disk radius must be positive");
    }
}

double signed_distance(const Line& line, const Disk& disk) {
    if (!std::isfinite(disk.cx) || !std::isfinite(disk.cy) || !std::isfinite(disk.r) ||
        !(disk.r > 0.0))
        throw input_error("signed_distance: invalid disk");
    return line.nx * disk.cx + line.ny * disk.cy - line.c;
}

SideClass side_of(const Line& line, const Disk& disk) {
    if (!std::isfinite(disk.cx) || !std::isfinite(disk.cy) || !std::isfinite(disk.r) ||
        !(disk.r > 0.0))
        throw input_error("side_of: invalid disk");
    const double t = line.nx * disk.cx + line.ny * disk.cy;
    return side_from_projection(t, disk.r, line.c);
}

Classification classify_all(const Line& line, const Instance& inst) {
    const int n = inst.n();
    Classification out;
    if (n == 0) return out;

    std::vector<std::uint8_t> side(static_cast<std::size_t>(n));
    int left = 0;
    int right = 0;
    const double nx = line.nx, ny = line.ny, c = line.c;
    const Disk* disks = inst.disks.data();

#pragma omp parallel for schedule(static) reduction(+ : left, right) \
    num_threads(max_threads()) if (n > 4096)
    for (int i = 0; i < n; ++i) {
        const Disk& d = disks[i];
        const SideClass s = side_from_projection(nx * d.cx + ny * d.cy, d.r, c);
        side[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(s);
        left += (s == SideClass::Left);
        right += (s == SideClass::Right);
    }

    out.left = left;
    out.right = right;
    out.crossed.reserve(static_cast<std::size_t>(n - left - right));
    for (int i = 0; i < n; ++i)
        if (side[static_cast<std::size_t>(i)] ==
            static_cast<std::uint8_t>(SideClass::Crossed))
            out.crossed.push_back(i);
    return out;
}

}  // namespace dsep
