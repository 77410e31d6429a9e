#include "placement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace laptopfit {

namespace {

constexpr double kSliverTol = 1e-7;       // classification-level cleanup
constexpr double kSharedEdgeTol = 1e-9;   // collinearity for piece merging
constexpr double kIsoscelesTol = 1e-6;

std::vector<Point2> sliver_cleaned(const ConvexPolygon& p) {
    std::vector<Point2> v = p.vertices();
    bool changed = true;
    while (changed && v.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < v.size() && v.size() >= 3; ++i) {
            const std::size_t n = v.size();
            const Point2 prev = v[(i + n - 1) % n];
            const Point2 cur = v[i];
            const Point2 next = v[(i + 1) % n];
            const double chord = distance(prev, next);
            const double dev = chord > 0.0 ? std::abs(cross(cur - prev, next - prev)) / chord : 0.0;
            if (distance(prev, cur) < kSliverTol || dev < kSliverTol) {
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                --i;
            }
        }
    }
    if (v.size() < 3) v.clear();
    return v;
}

// Monotone-chain hull, used only by the piece-merging step.
std::vector<Point2> convex_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Point2 a, Point2 b) { return distance(a, b) < kGeomEps; }),
              pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<Point2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

// True when the two polygons share a boundary segment of positive length.
bool share_edge_segment(const ConvexPolygon& a, const ConvexPolygon& b) {
    const auto& av = a.vertices();
    const auto& bv = b.vertices();
    for (std::size_t i = 0; i < av.size(); ++i) {
        const Point2 p = av[i];
        const Point2 q = av[(i + 1) % av.size()];
        const Point2 dir = q - p;
        const double len = distance(p, q);
        if (len < kGeomEps) continue;
        for (std::size_t j = 0; j < bv.size(); ++j) {
            const Point2 r = bv[j];
            const Point2 s = bv[(j + 1) % bv.size()];
            if (std::abs(cross(dir, r - p)) > kSharedEdgeTol * len) continue;
            if (std::abs(cross(dir, s - p)) > kSharedEdgeTol * len) continue;
            const double t0 = dot(dir, r - p) / (len * len);
            const double t1 = dot(dir, s - p) / (len * len);
            const double lo = std::max(0.0, std::min(t0, t1));
            const double hi = std::min(1.0, std::max(t0, t1));
            if ((hi - lo) * len > kSharedEdgeTol) return true;
        }
    }
    return false;
}

}  // namespace

LaptopSpec::LaptopSpec(double len) : length(len) {
    if (!std::isfinite(len) || len < 1.0) {
        throw std::invalid_argument("LaptopSpec: length must be >= 1 (laptop-width units)");
    }
}

TableSpec::TableSpec(double w, double h) : width(w), height(h) {
    if (!std::isfinite(w) || !std::isfinite(h) || !(w > 0.0) || !(h > 0.0)) {
        throw std::invalid_argument("TableSpec: sides must be positive");
    }
}

double TableSpec::diagonal() const {
    return std::hypot(width, height);
}

ConvexPolygon TableSpec::polygon() const {
    return ConvexPolygon::from_vertices(
        {{0.0, 0.0}, {width, 0.0}, {width, height}, {0.0, height}});
}

std::vector<Point2> TableSpec::corners() const {
    return {{0.0, 0.0}, {0.0, height}, {width, 0.0}, {width, height}};
}

Pose make_pose(double cx, double cy, double theta) {
    if (!std::isfinite(cx) || !std::isfinite(cy) || !std::isfinite(theta)) {
        throw std::invalid_argument("Pose: non-finite field");
    }
    return Pose{cx, cy, canonical_angle(theta)};
}

const char* shape_class_name(ShapeClass c) {
    switch (c) {
        case ShapeClass::Empty: return "Empty";
        case ShapeClass::Triangle: return "Triangle";
        case ShapeClass::Quadrilateral: return "Quadrilateral";
        case ShapeClass::Pentagon: return "Pentagon";
        case ShapeClass::Hexagon: return "Hexagon";
        case ShapeClass::Heptagon: return "Heptagon";
        case ShapeClass::Octagon: return "Octagon";
    }
    return "Empty";
}

bool is_stable(const Pose& pose, const TableSpec& table) {
    return pose.cx >= 0.0 && pose.cx <= table.width && pose.cy >= 0.0 && pose.cy <= table.height;
}

ConvexPolygon laptop_polygon(const LaptopSpec& laptop, const Pose& pose) {
    return rect_polygon(OrientedRect({pose.cx, pose.cy}, laptop.half_long(),
                                     LaptopSpec::half_short(), pose.theta));
}

double footprint_area(const LaptopSpec& laptop, const TableSpec& table, const Pose& pose) {
    return polygon_area(clip_convex(laptop_polygon(laptop, pose), table.polygon()));
}

FootprintReport footprint(const LaptopSpec& laptop, const TableSpec& table, const Pose& pose) {
    if (!is_stable(pose, table)) {
        throw UnstablePoseError("footprint: laptop midpoint is off the table");
    }
    FootprintReport report;
    report.polygon = clip_convex(laptop_polygon(laptop, pose), table.polygon());
    report.area = polygon_area(report.polygon);
    report.vertex_count = static_cast<int>(report.polygon.size());
    report.shape_class = classify_shape(report.polygon);
    report.is_isosceles_right_triangle = is_isosceles_right(report.polygon);
    report.protruding_pieces = protruding_pieces(laptop, table, pose);
    return report;
}

std::vector<ConvexPolygon> protruding_pieces(const LaptopSpec& laptop, const TableSpec& table,
                                             const Pose& pose) {
    if (!is_stable(pose, table)) {
        throw UnstablePoseError("protruding_pieces: laptop midpoint is off the table");
    }
    const ConvexPolygon lap = laptop_polygon(laptop, pose);
    const auto& lv = lap.vertices();

    std::vector<ConvexPolygon> pieces;
    ConvexPolygon remaining = table.polygon();
    for (std::size_t i = 0; i < lv.size() && !remaining.empty(); ++i) {
        const Point2 a = lv[i];
        const Point2 b = lv[(i + 1) % lv.size()];
        const Point2 e = b - a;
        const HalfPlane h({e.y, -e.x}, e.y * a.x - e.x * a.y);
        ConvexPolygon outside = clip_halfplane(remaining, h, false);
        if (!outside.empty()) pieces.push_back(std::move(outside));
        remaining = clip_halfplane(remaining, h, true);
    }

    // Undo splits along laptop edge lines that extend past the laptop itself:
    // merge pieces that share a boundary segment when their union is convex.
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < pieces.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < pieces.size() && !merged; ++j) {
                if (!share_edge_segment(pieces[i], pieces[j])) continue;
                std::vector<Point2> all = pieces[i].vertices();
                const auto& bj = pieces[j].vertices();
                all.insert(all.end(), bj.begin(), bj.end());
                ConvexPolygon hull = ConvexPolygon::from_clip_output(convex_hull(std::move(all)));
                const double sum = polygon_area(pieces[i]) + polygon_area(pieces[j]);
                if (std::abs(polygon_area(hull) - sum) <= 1e-9) {
                    pieces[i] = std::move(hull);
                    pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(j));
                    merged = true;
                }
            }
        }
    }
    return pieces;
}

ShapeClass classify_shape(const ConvexPolygon& p) {
    const std::size_t n = sliver_cleaned(p).size();
    switch (n) {
        case 0: return ShapeClass::Empty;
        case 3: return ShapeClass::Triangle;
        case 4: return ShapeClass::Quadrilateral;
        case 5: return ShapeClass::Pentagon;
        case 6: return ShapeClass::Hexagon;
        case 7: return ShapeClass::Heptagon;
        default: return ShapeClass::Octagon;
    }
}

bool is_isosceles_right(const ConvexPolygon& p) {
    const std::vector<Point2> v = sliver_cleaned(p);
    if (v.size() != 3) return false;
    for (int i = 0; i < 3; ++i) {
        const Point2 apex = v[static_cast<std::size_t>(i)];
        const Point2 e1 = v[static_cast<std::size_t>((i + 1) % 3)] - apex;
        const Point2 e2 = v[static_cast<std::size_t>((i + 2) % 3)] - apex;
        const double l1 = std::hypot(e1.x, e1.y);
        const double l2 = std::hypot(e2.x, e2.y);
        const double cos_angle = dot(e1, e2) / (l1 * l2);
        if (std::abs(cos_angle) <= kIsoscelesTol && std::abs(l1 - l2) <= kIsoscelesTol) {
            return true;
        }
    }
    return false;
}

std::pair<ShapeClass, bool> classify_footprint(const FootprintReport& report) {
    return {classify_shape(report.polygon), is_isosceles_right(report.polygon)};
}

}  // namespace laptopfit
