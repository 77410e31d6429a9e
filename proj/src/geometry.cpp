#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace laptopfit {

namespace {

bool lex_less(Point2 a, Point2 b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

double signed_area(const std::vector<Point2>& v) {
    const std::size_t n = v.size();
    if (n < 3) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& p = v[i];
        const Point2& q = v[(i + 1) % n];
        acc += cross(p, q);
    }
    return 0.5 * acc;
}

void rotate_to_lex_start(std::vector<Point2>& v) {
    if (v.empty()) return;
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (lex_less(v[i], v[best])) best = i;
    }
    std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(best), v.end());
}

}  // namespace

double distance(Point2 a, Point2 b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

double canonical_angle(double angle) {
    const double pi = std::numbers::pi;
    double a = std::fmod(angle, pi);
    if (a < 0.0) a += pi;
    if (a >= pi) a = 0.0;  // fmod can round up to pi
    return a;
}

HalfPlane::HalfPlane(Point2 n, double off) : normal(n), offset(off) {
    const double len = std::hypot(n.x, n.y);
    if (!(len > kGeomEps) || !std::isfinite(len) || !std::isfinite(off)) {
        throw std::invalid_argument("HalfPlane: degenerate normal");
    }
    normal = {n.x / len, n.y / len};
    offset = off / len;
}

OrientedRect::OrientedRect(Point2 c, double hl, double hs, double ang)
    : center(c), half_long(hl), half_short(hs), angle(canonical_angle(ang)) {
    if (!std::isfinite(c.x) || !std::isfinite(c.y) || !std::isfinite(hl) ||
        !std::isfinite(hs) || !std::isfinite(ang)) {
        throw std::invalid_argument("OrientedRect: non-finite field");
    }
    if (!(hs > 0.0) || !(hl >= hs)) {
        throw std::invalid_argument("OrientedRect: requires half_long >= half_short > 0");
    }
}

ConvexPolygon ConvexPolygon::from_vertices(std::vector<Point2> vertices) {
    if (vertices.empty()) return {};
    if (vertices.size() < 3) {
        throw std::invalid_argument("ConvexPolygon: nonempty polygon needs >= 3 vertices");
    }
    const std::size_t n = vertices.size();
    for (const Point2& p : vertices) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw std::invalid_argument("ConvexPolygon: non-finite vertex");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (distance(vertices[i], vertices[(i + 1) % n]) < kGeomEps) {
            throw std::invalid_argument("ConvexPolygon: consecutive vertices closer than 1e-12");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = vertices[i];
        const Point2 b = vertices[(i + 1) % n];
        const Point2 c = vertices[(i + 2) % n];
        if (cross(b - a, c - b) < -kGeomEps) {
            throw std::invalid_argument("ConvexPolygon: vertices not convex counterclockwise");
        }
    }
    rotate_to_lex_start(vertices);
    ConvexPolygon poly;
    poly.vertices_ = std::move(vertices);
    return poly;
}

ConvexPolygon ConvexPolygon::from_clip_output(std::vector<Point2> vertices) {
    // Drop consecutive duplicates (including the wrap-around pair).
    bool changed = true;
    while (changed && vertices.size() >= 2) {
        changed = false;
        std::vector<Point2> next;
        next.reserve(vertices.size());
        for (const Point2& p : vertices) {
            if (next.empty() || distance(next.back(), p) >= kGeomEps) {
                next.push_back(p);
            } else {
                changed = true;
            }
        }
        while (next.size() >= 2 && distance(next.front(), next.back()) < kGeomEps) {
            next.pop_back();
            changed = true;
        }
        vertices.swap(next);
    }
    // Drop collinear vertices introduced by clipping along an existing edge.
    changed = true;
    while (changed && vertices.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < vertices.size() && vertices.size() >= 3; ++i) {
            const std::size_t n = vertices.size();
            const Point2 a = vertices[(i + n - 1) % n];
            const Point2 b = vertices[i];
            const Point2 c = vertices[(i + 1) % n];
            if (std::abs(cross(b - a, c - b)) <= kGeomEps) {
                vertices.erase(vertices.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                --i;
            }
        }
    }
    if (vertices.size() < 3) return {};
    if (signed_area(vertices) < 0.0) {
        std::reverse(vertices.begin(), vertices.end());
    }
    if (std::abs(signed_area(vertices)) < kMinPolygonArea) return {};
    rotate_to_lex_start(vertices);
    ConvexPolygon poly;
    poly.vertices_ = std::move(vertices);
    return poly;
}

bool ConvexPolygon::contains(Point2 p, double tol) const {
    if (vertices_.empty()) return false;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = vertices_[i];
        const Point2 b = vertices_[(i + 1) % n];
        const Point2 e = b - a;
        if (cross(e, p - a) < -tol * std::hypot(e.x, e.y)) return false;
    }
    return true;
}

ConvexPolygon rect_polygon(const OrientedRect& r) {
    const Point2 u{std::cos(r.angle), std::sin(r.angle)};
    const Point2 v{-u.y, u.x};
    const Point2 du = r.half_long * u;
    const Point2 dv = r.half_short * v;
    std::vector<Point2> verts{
        r.center - du - dv,
        r.center + du - dv,
        r.center + du + dv,
        r.center - du + dv,
    };
    rotate_to_lex_start(verts);
    ConvexPolygon poly = ConvexPolygon::from_vertices(std::move(verts));
    return poly;
}

double polygon_area(const ConvexPolygon& p) {
    return std::abs(signed_area(p.vertices()));
}

ConvexPolygon clip_halfplane(const ConvexPolygon& subject, const HalfPlane& h, bool keep_inside) {
    if (subject.empty()) return {};
    const double sign = keep_inside ? 1.0 : -1.0;
    const auto& in = subject.vertices();
    std::vector<Point2> out;
    out.reserve(in.size() + 2);

    Point2 s = in.back();
    double ds = sign * (dot(h.normal, s) - h.offset);
    for (const Point2& e : in) {
        const double de = sign * (dot(h.normal, e) - h.offset);
        const bool s_in = ds <= kGeomEps;
        const bool e_in = de <= kGeomEps;
        if (e_in) {
            if (!s_in) {
                const double t = ds / (ds - de);
                out.push_back(s + t * (e - s));
            }
            out.push_back(e);
        } else if (s_in) {
            const double t = ds / (ds - de);
            out.push_back(s + t * (e - s));
        }
        s = e;
        ds = de;
    }
    return ConvexPolygon::from_clip_output(std::move(out));
}

ConvexPolygon clip_convex(const ConvexPolygon& subject, const ConvexPolygon& clipper) {
    if (subject.empty() || clipper.empty()) return {};
    ConvexPolygon result = subject;
    const auto& cv = clipper.vertices();
    const std::size_t n = cv.size();
    for (std::size_t i = 0; i < n && !result.empty(); ++i) {
        const Point2 a = cv[i];
        const Point2 b = cv[(i + 1) % n];
        const Point2 e = b - a;
        // Outward normal of a CCW edge; the polygon interior is the inside.
        const HalfPlane h({e.y, -e.x}, e.y * a.x - e.x * a.y);
        result = clip_halfplane(result, h, true);
    }
    return result;
}

McEstimate monte_carlo_overlap(const ConvexPolygon& a, const ConvexPolygon& b,
                               std::uint64_t samples, std::uint64_t seed) {
    if (samples == 0) {
        throw std::invalid_argument("monte_carlo_overlap: samples must be positive");
    }
    if (a.empty()) {
        throw std::invalid_argument("monte_carlo_overlap: sampling domain polygon is empty");
    }
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = min_x;
    double max_x = -min_x;
    double max_y = -min_x;
    for (const Point2& p : a.vertices()) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    const double w = max_x - min_x;
    const double h = max_y - min_y;
    const double box_area = w * h;

    std::mt19937_64 rng(seed);
    auto uniform01 = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const double px = min_x + w * uniform01();
        const double py = min_y + h * uniform01();
        const Point2 p{px, py};
        if (a.contains(p, 0.0) && b.contains(p, 0.0)) ++hits;
    }
    const double n = static_cast<double>(samples);
    const double frac = static_cast<double>(hits) / n;
    McEstimate est;
    est.estimate = box_area * frac;
    est.std_error = box_area * std::sqrt(frac * (1.0 - frac) / n);
    return est;
}

}  // namespace laptopfit
