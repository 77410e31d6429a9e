#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace laptopfit {

// All coordinates are in laptop-width units, so magnitudes are O(1) and the
// tolerances below are absolute.
inline constexpr double kGeomEps = 1e-12;        // duplicate / collinear vertices
inline constexpr double kMinPolygonArea = 1e-15; // below this a polygon collapses to empty

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double distance(Point2 a, Point2 b);

// Wraps an angle into [0, pi); rectangles are symmetric under half turns.
double canonical_angle(double angle);

// Half-plane {p : dot(normal, p) <= offset}. The constructor normalizes and
// rejects a near-zero normal.
struct HalfPlane {
    Point2 normal;
    double offset = 0.0;
    HalfPlane(Point2 n, double off);
};

// Rectangle at an arbitrary orientation. `angle` is the direction of the long
// axis, canonical in [0, pi). Requires half_long >= half_short > 0.
struct OrientedRect {
    Point2 center;
    double half_long = 0.0;
    double half_short = 0.0;
    double angle = 0.0;
    OrientedRect(Point2 c, double hl, double hs, double ang);
};

// Counterclockwise convex polygon; the empty polygon is a valid value.
// Vertices start at the lexicographically smallest one so that equal regions
// compare equal and golden files stay stable.
class ConvexPolygon {
  public:
    ConvexPolygon() = default;

    // Validates CCW order, convexity (cross products >= -1e-12) and vertex
    // spacing; throws std::invalid_argument on violation.
    static ConvexPolygon from_vertices(std::vector<Point2> vertices);

    // Canonicalizes raw clipper output: drops duplicate and collinear
    // vertices, collapses near-zero area to empty, rotates to the lex start.
    static ConvexPolygon from_clip_output(std::vector<Point2> vertices);

    bool empty() const { return vertices_.empty(); }
    std::size_t size() const { return vertices_.size(); }
    const std::vector<Point2>& vertices() const { return vertices_; }

    // Closed containment test; `tol` is a distance.
    bool contains(Point2 p, double tol = 1e-9) const;

  private:
    std::vector<Point2> vertices_;
};

ConvexPolygon rect_polygon(const OrientedRect& r);

// Shoelace area; 0 for the empty polygon.
double polygon_area(const ConvexPolygon& p);

ConvexPolygon clip_halfplane(const ConvexPolygon& subject, const HalfPlane& h, bool keep_inside);

// subject ∩ clipper by iterated half-plane clipping (both operands convex).
ConvexPolygon clip_convex(const ConvexPolygon& subject, const ConvexPolygon& clipper);

// Rejection-sampling estimate of area(a ∩ b) over the bounding box of `a`.
// Deterministic for a fixed (seed, samples) pair.
struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
};
McEstimate monte_carlo_overlap(const ConvexPolygon& a, const ConvexPolygon& b,
                               std::uint64_t samples, std::uint64_t seed);

}  // namespace laptopfit
