#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "geometry.hpp"

namespace laptopfit {

// The laptop's short side is the unit of length; only the long side varies.
struct LaptopSpec {
    double length = 1.0;
    explicit LaptopSpec(double len);
    double half_long() const { return 0.5 * length; }
    static constexpr double half_short() { return 0.5; }
};

// The table occupies the axis-aligned region [0, W] x [0, H].
struct TableSpec {
    double width = 1.0;
    double height = 1.0;
    TableSpec(double w, double h);
    double min_side() const { return width < height ? width : height; }
    double diagonal() const;
    ConvexPolygon polygon() const;
    // Table corners in lexicographic order.
    std::vector<Point2> corners() const;
};

// Laptop midpoint (= center of gravity) and long-axis direction.
struct Pose {
    double cx = 0.0;
    double cy = 0.0;
    double theta = 0.0;  // canonical in [0, pi)
};

Pose make_pose(double cx, double cy, double theta);

struct UnstablePoseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class ShapeClass {
    Empty,
    Triangle,
    Quadrilateral,
    Pentagon,
    Hexagon,
    Heptagon,
    Octagon,
};

const char* shape_class_name(ShapeClass c);

struct FootprintReport {
    ConvexPolygon polygon;
    double area = 0.0;
    int vertex_count = 0;
    ShapeClass shape_class = ShapeClass::Empty;
    bool is_isosceles_right_triangle = false;
    std::vector<ConvexPolygon> protruding_pieces;
};

// A placement is stable iff the midpoint lies on the closed table region.
bool is_stable(const Pose& pose, const TableSpec& table);

ConvexPolygon laptop_polygon(const LaptopSpec& laptop, const Pose& pose);

// Footprint = laptop ∩ table plus derived shape data and the protruding
// decomposition; throws UnstablePoseError for poses off the table.
FootprintReport footprint(const LaptopSpec& laptop, const TableSpec& table, const Pose& pose);

// Fast path used by the optimizer: footprint area only.
double footprint_area(const LaptopSpec& laptop, const TableSpec& table, const Pose& pose);

// Convex decomposition of table \ laptop: the table is clipped against the
// outside of each laptop edge in turn, then adjacent pieces whose union is
// convex are merged back together.
std::vector<ConvexPolygon> protruding_pieces(const LaptopSpec& laptop, const TableSpec& table,
                                             const Pose& pose);

// Shape classification ignores sliver vertices (edges or deviations below
// 1e-7) so near-degenerate optima still classify by their true shape.
ShapeClass classify_shape(const ConvexPolygon& p);
bool is_isosceles_right(const ConvexPolygon& p);
std::pair<ShapeClass, bool> classify_footprint(const FootprintReport& report);

}  // namespace laptopfit
