// Test-side oracles, independent of the search and clipping paths they check.
#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "geometry.hpp"
#include "optimizer.hpp"
#include "placement.hpp"

namespace oracles {

inline constexpr double kPi = std::numbers::pi;

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    double uniform01() { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
};

inline laptopfit::OrientedRect random_rect(Rng& rng) {
    const double hs = rng.uniform(0.1, 0.8);
    const double hl = hs + rng.uniform(0.0, 1.2);
    return laptopfit::OrientedRect({rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)}, hl, hs,
                                   rng.uniform(0.0, kPi));
}

inline laptopfit::Pose random_stable_pose(Rng& rng, const laptopfit::TableSpec& table) {
    return laptopfit::Pose{table.width * rng.uniform01(), table.height * rng.uniform01(),
                           laptopfit::canonical_angle(kPi * rng.uniform01())};
}

// Exhaustive direct evaluation; no seeding, no refinement, no symmetry trick.
inline double brute_force_min_area(const laptopfit::LaptopSpec& laptop,
                                   const laptopfit::TableSpec& table, int nxy, int ntheta) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= nxy; ++i) {
        for (int j = 0; j <= nxy; ++j) {
            for (int k = 0; k < ntheta; ++k) {
                const laptopfit::Pose pose{table.width * i / nxy, table.height * j / nxy,
                                           (k * kPi) / ntheta};
                best = std::min(best, laptopfit::footprint_area(laptop, table, pose));
            }
        }
    }
    return best;
}

// Closed-form protruding-triangle legs for a laptop midpoint on the table
// corner (0, 0): the near long edge is the line x*cos(phi) + y*sin(phi) = 1/2
// and the triangle is cut off the far corner (W, H). Returns (horizontal leg
// along y = H, vertical leg along x = W) or nothing when the cut does not
// isolate exactly that corner.
struct CornerCut {
    double leg_horizontal = 0.0;
    double leg_vertical = 0.0;
    double area() const { return 0.5 * leg_horizontal * leg_vertical; }
};

inline std::optional<CornerCut> corner_cut_legs(double w, double h, double phi) {
    const double sp = std::sin(phi);
    const double cp = std::cos(phi);
    if (sp <= 0.0 || cp <= 0.0) return std::nullopt;
    const double x_top = (0.5 - h * sp) / cp;  // cut line meets y = h here
    const double y_right = (0.5 - w * cp) / sp;
    const double a = w - x_top;
    const double b = h - y_right;
    if (a <= 0.0 || b <= 0.0 || a > w || b > h) return std::nullopt;
    return CornerCut{a, b};
}

// Dense scan over the cut direction; the independent maximizer for the
// scenario-2 triangle.
struct CornerCutOpt {
    CornerCut cut;
    double phi = 0.0;
};

inline std::optional<CornerCutOpt> best_corner_cut(double w, double h, int steps = 4000000) {
    std::optional<CornerCutOpt> best;
    for (int i = 1; i < steps; ++i) {
        const double phi = (i * (kPi / 2.0)) / steps;
        const auto cut = corner_cut_legs(w, h, phi);
        if (cut && (!best || cut->area() > best->cut.area())) {
            best = CornerCutOpt{*cut, phi};
        }
    }
    return best;
}

// Minimal XML well-formedness check: every element closes, attributes quoted.
inline bool xml_well_formed(const std::string& doc) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    while (i < doc.size()) {
        if (doc[i] != '<') {
            if (doc[i] == '>') return false;
            ++i;
            continue;
        }
        std::size_t close = doc.find('>', i);
        if (close == std::string::npos) return false;
        std::string tag = doc.substr(i + 1, close - i - 1);
        if (tag.empty()) return false;
        if (tag[0] == '?' || tag[0] == '!') {
            i = close + 1;
            continue;
        }
        // quotes must pair up inside the tag
        if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return false;
        if (tag[0] == '/') {
            if (stack.empty() || stack.back() != tag.substr(1)) return false;
            stack.pop_back();
        } else if (tag.back() != '/') {
            std::string name = tag.substr(0, tag.find_first_of(" \t\n"));
            stack.push_back(name);
        }
        i = close + 1;
    }
    return stack.empty();
}

inline laptopfit::ConvexPolygon rigid_transform(const laptopfit::ConvexPolygon& poly, double angle,
                                                laptopfit::Point2 shift) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    std::vector<laptopfit::Point2> verts;
    verts.reserve(poly.size());
    for (const laptopfit::Point2& p : poly.vertices()) {
        verts.push_back({c * p.x - s * p.y + shift.x, s * p.x + c * p.y + shift.y});
    }
    return laptopfit::ConvexPolygon::from_clip_output(std::move(verts));
}

}  // namespace oracles
