#include <doctest.h>

#include <cmath>
#include <numbers>

#include "geometry.hpp"
#include "oracles.hpp"

using namespace laptopfit;

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

ConvexPolygon box(double x0, double y0, double x1, double y1) {
    return ConvexPolygon::from_vertices({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

bool same_vertices(const ConvexPolygon& poly, const std::vector<Point2>& expected, double tol) {
    if (poly.size() != expected.size()) return false;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (distance(poly.vertices()[i], expected[i]) > tol) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("rect_polygon produces the axis-aligned unit square") {
    const ConvexPolygon poly = rect_polygon(OrientedRect({0.5, 0.5}, 0.5, 0.5, 0.0));
    CHECK(same_vertices(poly, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}, 1e-12));
    double mx = 0.0, my = 0.0;
    for (const Point2& p : poly.vertices()) {
        mx += p.x;
        my += p.y;
    }
    CHECK(std::abs(mx / 4.0 - 0.5) <= 1e-12);
    CHECK(std::abs(my / 4.0 - 0.5) <= 1e-12);
}

TEST_CASE("rect_polygon swaps extents under a quarter turn") {
    const ConvexPolygon poly = rect_polygon(OrientedRect({0, 0}, 1.0, 0.5, kPi / 2.0));
    CHECK(same_vertices(poly, {{-0.5, -1}, {0.5, -1}, {0.5, 1}, {-0.5, 1}}, 1e-12));
}

TEST_CASE("rect_polygon rotates the unit square onto the diamond") {
    const ConvexPolygon poly = rect_polygon(OrientedRect({0, 0}, 0.5, 0.5, kPi / 4.0));
    CHECK(same_vertices(poly,
                        {{-kInvSqrt2, 0}, {0, -kInvSqrt2}, {kInvSqrt2, 0}, {0, kInvSqrt2}},
                        1e-12));
}

TEST_CASE("oriented rect validation") {
    CHECK_THROWS_AS(OrientedRect({0, 0}, 0.4, 0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(OrientedRect({0, 0}, 0.5, 0.0, 0.0), std::invalid_argument);
    const OrientedRect r({0, 0}, 1.0, 0.5, kPi + 0.25);  // canonicalized
    CHECK(r.angle == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("clip_convex identity") {
    const ConvexPolygon square = box(0, 0, 1, 1);
    const ConvexPolygon result = clip_convex(square, square);
    CHECK(polygon_area(result) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(same_vertices(result, square.vertices(), 1e-12));
}

TEST_CASE("clip_convex axis-aligned overlap") {
    const ConvexPolygon result = clip_convex(box(0, 0, 1, 1), box(0.5, 0, 1.5, 1));
    CHECK(polygon_area(result) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(same_vertices(result, {{0.5, 0}, {1, 0}, {1, 1}, {0.5, 1}}, 1e-12));
}

TEST_CASE("clip_convex diamond against quadrant square") {
    const ConvexPolygon diamond = rect_polygon(OrientedRect({0, 0}, 0.5, 0.5, kPi / 4.0));
    const ConvexPolygon result = clip_convex(diamond, box(0, 0, 2, 2));
    CHECK(polygon_area(result) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(same_vertices(result, {{0, 0}, {kInvSqrt2, 0}, {0, kInvSqrt2}}, 1e-12));
}

TEST_CASE("clip_convex with empty operands") {
    CHECK(clip_convex(ConvexPolygon{}, box(0, 0, 1, 1)).empty());
    CHECK(clip_convex(box(0, 0, 1, 1), ConvexPolygon{}).empty());
}

TEST_CASE("polygon_area basics") {
    CHECK(polygon_area(box(0, 0, 1, 1)) == doctest::Approx(1.0).epsilon(1e-15));
    const ConvexPolygon tri =
        ConvexPolygon::from_vertices({{0, 0}, {kInvSqrt2, 0}, {0, kInvSqrt2}});
    CHECK(polygon_area(tri) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(polygon_area(ConvexPolygon{}) == 0.0);
}

TEST_CASE("clip_halfplane keeps either side") {
    const ConvexPolygon square = box(0, 0, 1, 1);
    const HalfPlane h({1, 0}, 0.5);  // x <= 0.5
    const ConvexPolygon inside = clip_halfplane(square, h, true);
    const ConvexPolygon outside = clip_halfplane(square, h, false);
    CHECK(same_vertices(inside, {{0, 0}, {0.5, 0}, {0.5, 1}, {0, 1}}, 1e-12));
    CHECK(same_vertices(outside, {{0.5, 0}, {1, 0}, {1, 1}, {0.5, 1}}, 1e-12));

    CHECK(clip_halfplane(square, HalfPlane({1, 0}, 2.0), false).empty());
}

TEST_CASE("clip_halfplane partition preserves area") {
    oracles::Rng rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const ConvexPolygon poly = rect_polygon(oracles::random_rect(rng));
        const double angle = rng.uniform(0.0, 2.0 * kPi);
        const HalfPlane h({std::cos(angle), std::sin(angle)}, rng.uniform(-1.0, 1.0));
        const double in = polygon_area(clip_halfplane(poly, h, true));
        const double out = polygon_area(clip_halfplane(poly, h, false));
        CHECK(std::abs(in + out - polygon_area(poly)) <= 1e-12);
    }
}

TEST_CASE("clip_convex idempotence, bound and symmetry") {
    oracles::Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        // alternate between rectangles and clipped (up to octagonal) polygons
        ConvexPolygon a = rect_polygon(oracles::random_rect(rng));
        ConvexPolygon b = rect_polygon(oracles::random_rect(rng));
        if (trial % 2 == 1) {
            const ConvexPolygon cut = clip_convex(a, rect_polygon(oracles::random_rect(rng)));
            if (!cut.empty()) a = cut;
        }
        CHECK(std::abs(polygon_area(clip_convex(a, a)) - polygon_area(a)) <= 1e-12);
        const double ab = polygon_area(clip_convex(a, b));
        const double ba = polygon_area(clip_convex(b, a));
        CHECK(ab <= std::min(polygon_area(a), polygon_area(b)) + 1e-12);
        CHECK(std::abs(ab - ba) <= 1e-12);
    }
}

TEST_CASE("clip_convex output vertices lie in both inputs") {
    oracles::Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const ConvexPolygon a = rect_polygon(oracles::random_rect(rng));
        const ConvexPolygon b = rect_polygon(oracles::random_rect(rng));
        const ConvexPolygon r = clip_convex(a, b);
        for (const Point2& v : r.vertices()) {
            CHECK(a.contains(v, 1e-9));
            CHECK(b.contains(v, 1e-9));
        }
    }
}

TEST_CASE("clip_convex is rigid-motion equivariant") {
    oracles::Rng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const ConvexPolygon a = rect_polygon(oracles::random_rect(rng));
        const ConvexPolygon b = rect_polygon(oracles::random_rect(rng));
        const double angle = rng.uniform(0.0, 2.0 * kPi);
        const Point2 shift{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        const double base = polygon_area(clip_convex(a, b));
        const double moved = polygon_area(clip_convex(oracles::rigid_transform(a, angle, shift),
                                                      oracles::rigid_transform(b, angle, shift)));
        CHECK(std::abs(base - moved) <= 1e-9);
    }
}

TEST_CASE("monte_carlo_overlap on exact cases") {
    const ConvexPolygon square = box(0, 0, 1, 1);
    const McEstimate self = monte_carlo_overlap(square, square, 1000000, 1);
    CHECK(self.estimate == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(self.std_error == 0.0);

    const McEstimate none = monte_carlo_overlap(square, box(2, 2, 3, 3), 100000, 2);
    CHECK(none.estimate == 0.0);

    const ConvexPolygon diamond = rect_polygon(OrientedRect({0, 0}, 0.5, 0.5, kPi / 4.0));
    const McEstimate quad = monte_carlo_overlap(diamond, box(0, 0, 2, 2), 1000000, 3);
    CHECK(std::abs(quad.estimate - 0.25) <= 4.0 * quad.std_error);
}

TEST_CASE("monte_carlo_overlap input validation") {
    const ConvexPolygon square = box(0, 0, 1, 1);
    CHECK_THROWS_AS(monte_carlo_overlap(square, square, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(monte_carlo_overlap(ConvexPolygon{}, square, 10, 1), std::invalid_argument);
}

TEST_CASE("monte_carlo_overlap agrees with clipping on random rectangles") {
    oracles::Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const ConvexPolygon a = rect_polygon(oracles::random_rect(rng));
        const ConvexPolygon b = rect_polygon(oracles::random_rect(rng));
        const double clipped = polygon_area(clip_convex(a, b));
        const McEstimate mc =
            monte_carlo_overlap(a, b, 1000000, 1000 + static_cast<std::uint64_t>(trial));
        CHECK(std::abs(clipped - mc.estimate) <= 4.0 * mc.std_error + 1e-12);
    }
}

TEST_CASE("monte_carlo_overlap is deterministic per seed") {
    const ConvexPolygon a = rect_polygon(OrientedRect({0.2, 0.1}, 0.9, 0.4, 0.7));
    const ConvexPolygon b = box(0, 0, 1, 1);
    const McEstimate first = monte_carlo_overlap(a, b, 200000, 42);
    const McEstimate second = monte_carlo_overlap(a, b, 200000, 42);
    CHECK(first.estimate == second.estimate);
    CHECK(first.std_error == second.std_error);
}

TEST_CASE("convex polygon validation") {
    CHECK_THROWS_AS(ConvexPolygon::from_vertices({{0, 0}, {1, 0}}), std::invalid_argument);
    // clockwise
    CHECK_THROWS_AS(ConvexPolygon::from_vertices({{0, 0}, {0, 1}, {1, 1}, {1, 0}}),
                    std::invalid_argument);
    // repeated vertex
    CHECK_THROWS_AS(ConvexPolygon::from_vertices({{0, 0}, {0, 0}, {1, 1}}),
                    std::invalid_argument);
    // non-convex
    CHECK_THROWS_AS(
        ConvexPolygon::from_vertices({{0, 0}, {2, 0}, {1, 0.2}, {2, 2}, {0, 2}}),
        std::invalid_argument);
    CHECK(ConvexPolygon::from_vertices({}).empty());
}

TEST_CASE("canonical vertex order starts at the lexicographic minimum") {
    const ConvexPolygon poly = ConvexPolygon::from_vertices({{1, 0}, {1, 1}, {0, 1}, {0, 0}});
    CHECK(poly.vertices().front().x == 0.0);
    CHECK(poly.vertices().front().y == 0.0);
}

TEST_CASE("degenerate clip output collapses to empty") {
    const ConvexPolygon square = box(0, 0, 1, 1);
    // tangent half-plane: keep-outside leaves only the shared edge
    const ConvexPolygon sliver = clip_halfplane(square, HalfPlane({1, 0}, 1.0), false);
    CHECK(sliver.empty());
}
