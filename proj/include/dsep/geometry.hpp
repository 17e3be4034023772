#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dsep {

// Thrown for malformed user input (bad parameters, bad files). The CLI maps
// it to exit code 1.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when an internal certificate fails (a bug, not user error). The CLI
// maps it to exit code 2.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

// Closed disk. Units are unit-disk radii; r == 1 for unit-disk instances.
struct Disk {
    int id = 0;
    double cx = 0.0;
    double cy = 0.0;
    double r = 1.0;
};

// Oriented line {p : nx*p.x + ny*p.y = c} in unit-normal form, so vertical
// lines need no special case.
struct Line {
    double nx = 1.0;
    double ny = 0.0;
    double c = 0.0;

    Line() = default;
    Line(double nx_, double ny_, double c_);  // validates |n| == 1 (1e-12)

    // Line whose direction makes `direction` radians with the x-axis; the
    // normal is direction + pi/2 and `offset` is the normal coordinate.
    static Line from_angle(double direction, double offset);
    static Line through_point(double direction, Point p);

    Line flipped() const { return Line(-nx, -ny, -c); }
};

enum class SideClass { Crossed, Left, Right };

struct Instance {
    std::vector<Disk> disks;
    // generator name + parameters + seed; enough to regenerate bit-identically
    std::string provenance;

    int n() const { return static_cast<int>(disks.size()); }
    double min_radius() const;
    double max_radius() const;
    std::vector<Point> centers() const;
};

// Throws input_error unless radii are positive and finite and ids are the
// sequence 0..n-1.
void validate_instance(const Instance& inst);

// Signed distance from the disk center to the line, d = n . center - c.
// Left iff d < -r, Right iff d > r, Crossed iff |d| <= r (closed disks, so
// tangency counts as crossing). Throws input_error on non-finite input.
double signed_distance(const Line& line, const Disk& disk);
SideClass side_of(const Line& line, const Disk& disk);

// Trichotomy on a center projection t against line offset c. Single home of
// the comparison so sweeps and classification agree bit-for-bit.
inline SideClass side_from_projection(double t, double r, double c) {
    if (t + r < c) return SideClass::Left;
    if (t - r > c) return SideClass::Right;
    return SideClass::Crossed;
}

struct Classification {
    std::vector<int> crossed;  // ascending disk indices
    int left = 0;
    int right = 0;
};

// Partition of all disks against the line; |crossed| + left + right == n.
Classification classify_all(const Line& line, const Instance& inst);

}  // namespace dsep
