#include "analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <optional>
#include <random>

namespace laptopfit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuarter = 0.25;
constexpr double kAreaTol = 1e-9;
constexpr double kThetaWindow = 1e-3;
constexpr double kPieceFloor = 1e-12;  // protruding pieces below this are numeric dust
constexpr long long kDefaultProbeSamples = 20000;
constexpr int kScenario2ThetaSamples = 2048;
constexpr std::size_t kMaxViolationRows = 100;

struct PoseSampler {
    std::mt19937_64 rng;
    explicit PoseSampler(std::uint64_t seed) : rng(seed) {}
    double uniform01() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
    Pose stable_pose(const TableSpec& table) {
        const double cx = table.width * uniform01();
        const double cy = table.height * uniform01();
        const double theta = kPi * uniform01();
        return Pose{cx, cy, canonical_angle(theta)};
    }
};

double angular_distance(double a, double b) {
    const double d = std::abs(canonical_angle(a) - canonical_angle(b));
    return std::min(d, kPi - d);
}

double distance_to_symmetric_family(double theta) {
    return std::min(angular_distance(theta, kPi / 4.0), angular_distance(theta, 3.0 * kPi / 4.0));
}

std::vector<ConvexPolygon> significant_pieces(const LaptopSpec& laptop, const TableSpec& table,
                                              const Pose& pose) {
    std::vector<ConvexPolygon> pieces = protruding_pieces(laptop, table, pose);
    std::erase_if(pieces, [](const ConvexPolygon& p) { return polygon_area(p) < kPieceFloor; });
    return pieces;
}

int contained_table_corners(const ConvexPolygon& piece, const TableSpec& table) {
    int count = 0;
    for (const Point2& c : table.corners()) {
        if (piece.contains(c, 1e-9)) ++count;
    }
    return count;
}

// Scenario-2 configuration: exactly one protruding piece, a triangle holding
// exactly one table corner. Returns the piece when the pose qualifies.
std::optional<ConvexPolygon> single_corner_triangle(const LaptopSpec& laptop,
                                                    const TableSpec& table, const Pose& pose) {
    std::vector<ConvexPolygon> pieces = significant_pieces(laptop, table, pose);
    if (pieces.size() != 1) return std::nullopt;
    if (classify_shape(pieces.front()) != ShapeClass::Triangle) return std::nullopt;
    if (contained_table_corners(pieces.front(), table) != 1) return std::nullopt;
    return std::move(pieces.front());
}

}  // namespace

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::FullTable: return "FullTable";
        case Regime::CornerTriangle: return "CornerTriangle";
        case Regime::Complex: return "Complex";
        case Regime::ConjecturedQuarter: return "ConjecturedQuarter";
        case Regime::TheoremRegime: return "TheoremRegime";
    }
    return "Complex";
}

Pose symmetric_corner_pose(const TableSpec& table, int corner_index) {
    // The long axis lies at 45 degrees to both edges, oriented so that the
    // outward normal of the nearer long side points into the table quadrant.
    switch (corner_index) {
        case 0: return Pose{0.0, 0.0, 3.0 * kPi / 4.0};
        case 1: return Pose{0.0, table.height, kPi / 4.0};
        case 2: return Pose{table.width, 0.0, kPi / 4.0};
        case 3: return Pose{table.width, table.height, 3.0 * kPi / 4.0};
        default: throw std::invalid_argument("symmetric_corner_pose: corner index out of range");
    }
}

VerificationReport verify_corner_constancy(const LaptopSpec& laptop, const TableSpec& table,
                                           int theta_samples) {
    if (laptop.length != 1.0) {
        throw std::invalid_argument("verify_corner_constancy: requires a square laptop");
    }
    if (theta_samples < 4) {
        throw std::invalid_argument("verify_corner_constancy: needs at least 4 theta samples");
    }
    VerificationReport report;
    char name[128];
    std::snprintf(name, sizeof(name), "corner_constancy[min_side=%.6g,claim_valid_from=%.6g,%s]",
                  table.min_side(), thresholds::corner_leg,
                  table.min_side() >= thresholds::corner_leg ? "met" : "unmet");
    report.name = name;
    report.samples = theta_samples;

    for (int k = 0; k < theta_samples; ++k) {
        const double theta = (k * kPi) / theta_samples;
        const double area = footprint_area(laptop, table, Pose{0.0, 0.0, theta});
        report.details.push_back({theta, area, kQuarter});
        report.max_deviation = std::max(report.max_deviation, std::abs(area - kQuarter));
    }
    report.passed = report.max_deviation <= kAreaTol;
    return report;
}

VerificationReport verify_corner_sweep(const LaptopSpec& laptop, const TableSpec& table,
                                       int theta_samples) {
    if (laptop.length <= 1.0) {
        throw std::invalid_argument(
            "verify_corner_sweep: requires a non-square laptop (use corner constancy instead)");
    }
    if (table.min_side() < thresholds::corner_leg) {
        throw RegimeError("verify_corner_sweep: table min side below 1/sqrt(2)");
    }
    if (theta_samples < 4) {
        throw std::invalid_argument("verify_corner_sweep: needs at least 4 theta samples");
    }
    VerificationReport report;
    report.name = "corner_sweep";
    report.samples = theta_samples;

    double min_area = std::numeric_limits<double>::infinity();
    for (int k = 0; k < theta_samples; ++k) {
        const double theta = (k * kPi) / theta_samples;
        const double area = footprint_area(laptop, table, Pose{0.0, 0.0, theta});
        report.details.push_back({theta, area, kQuarter});
        min_area = std::min(min_area, area);
    }
    // Deviation mixes two defect kinds: how far any area falls below 1/4, and
    // for minimum-attaining samples, how far the angle sits outside the
    // symmetric 45-degree windows. Both are ~0 when the sweep is healthy.
    double defect = 0.0;
    for (const DetailRow& row : report.details) {
        defect = std::max(defect, kQuarter - row.measured);
        if (row.measured <= min_area + kAreaTol) {
            const double dist = distance_to_symmetric_family(row.input);
            if (dist > kThetaWindow) defect = std::max(defect, dist);
        }
    }
    report.max_deviation = std::max(defect, 0.0);
    report.passed = report.max_deviation <= kAreaTol;
    return report;
}

VerificationReport verify_bounds(const LaptopSpec& laptop, const TableSpec& table,
                                 long long pose_samples, std::uint64_t seed) {
    if (table.min_side() < thresholds::theorem_min_side) {
        throw RegimeError("verify_bounds: table min side below 1 (outside the theorem regime)");
    }
    if (pose_samples <= 0) {
        throw std::invalid_argument("verify_bounds: needs at least one pose sample");
    }
    VerificationReport report;
    report.name = "bounds";
    report.samples = pose_samples;

    PoseSampler sampler(seed);
    double worst_area = std::numeric_limits<double>::infinity();
    long long worst_index = -1;
    for (long long k = 0; k < pose_samples; ++k) {
        const Pose pose = sampler.stable_pose(table);
        const double area = footprint_area(laptop, table, pose);
        if (area < worst_area) {
            worst_area = area;
            worst_index = k;
        }
        if (area < kQuarter - kAreaTol && report.details.size() < kMaxViolationRows) {
            report.details.push_back({static_cast<double>(k), area, kQuarter});
        }
    }
    report.details.push_back({static_cast<double>(worst_index), worst_area, kQuarter});

    const double corner_area = footprint_area(laptop, table, symmetric_corner_pose(table, 0));
    report.details.push_back({-1.0, corner_area, kQuarter});

    report.max_deviation =
        std::max(std::max(0.0, kQuarter - worst_area), std::max(0.0, corner_area - kQuarter));
    report.passed = report.max_deviation <= kAreaTol;
    return report;
}

Regime classify_regime(const LaptopSpec& laptop, const TableSpec& table, long long probe_samples,
                       std::uint64_t seed) {
    if (table.diagonal() <= thresholds::half_width + 1e-12) return Regime::FullTable;
    if (table.min_side() >= thresholds::theorem_min_side) return Regime::TheoremRegime;
    if (table.min_side() >= thresholds::corner_leg) return Regime::ConjecturedQuarter;

    if (probe_samples <= 0) probe_samples = kDefaultProbeSamples;
    PoseSampler sampler(seed);
    for (long long k = 0; k < probe_samples; ++k) {
        const Pose pose = sampler.stable_pose(table);
        std::vector<ConvexPolygon> pieces = significant_pieces(laptop, table, pose);
        if (pieces.empty()) continue;
        if (pieces.size() != 1) return Regime::Complex;
        if (classify_shape(pieces.front()) != ShapeClass::Triangle) return Regime::Complex;
        if (contained_table_corners(pieces.front(), table) != 1) return Regime::Complex;
    }
    return Regime::CornerTriangle;
}

Scenario2Report scenario2_analyze(const LaptopSpec& laptop, const TableSpec& table,
                                  const SearchConfig& config) {
    if (table.diagonal() <= thresholds::half_width + 1e-12) {
        throw RegimeError("scenario2_analyze: regime is FullTable, no protruding piece exists");
    }
    if (table.min_side() >= thresholds::corner_leg) {
        throw RegimeError("scenario2_analyze: table min side is >= 1/sqrt(2), use solve()");
    }

    struct CornerBest {
        bool found = false;
        Pose pose;
        double area = std::numeric_limits<double>::infinity();
    };

    auto evaluate = [&](const Pose& pose) -> std::optional<double> {
        if (!single_corner_triangle(laptop, table, pose)) return std::nullopt;
        return footprint_area(laptop, table, pose);
    };

    CornerBest best;
    for (int corner = 0; corner < 4; ++corner) {
        const Pose anchor = symmetric_corner_pose(table, corner);
        CornerBest local;
        for (int k = 0; k < kScenario2ThetaSamples; ++k) {
            const Pose pose{anchor.cx, anchor.cy, (k * kPi) / kScenario2ThetaSamples};
            if (const auto area = evaluate(pose); area && *area < local.area) {
                local = {true, pose, *area};
            }
        }
        if (!local.found) continue;
        // Theta-only pattern search; the midpoint stays pinned on the corner.
        double step = kPi / kScenario2ThetaSamples;
        for (int iter = 0; iter < config.refine_max_iters; ++iter) {
            bool improved = false;
            for (const double dir : {1.0, -1.0}) {
                const Pose cand{local.pose.cx, local.pose.cy,
                                canonical_angle(local.pose.theta + dir * step)};
                if (const auto area = evaluate(cand); area && *area < local.area) {
                    local.pose = cand;
                    local.area = *area;
                    improved = true;
                }
            }
            if (!improved) {
                step *= 0.5;
                if (step < config.refine_min_step) break;
            }
        }
        // Corners iterate in lex order, so a tie keeps the smaller corner.
        if (!best.found || local.area < best.area - config.tie_tolerance) best = local;
    }
    if (!best.found) {
        throw RegimeError(
            "scenario2_analyze: no corner placement leaves a single-corner triangle exposed");
    }

    const ConvexPolygon piece = *single_corner_triangle(laptop, table, best.pose);
    Point2 exposed{};
    for (const Point2& c : table.corners()) {
        if (piece.contains(c, 1e-9)) {
            exposed = c;
            break;
        }
    }
    double leg_horizontal = 0.0;
    double leg_vertical = 0.0;
    for (const Point2& v : piece.vertices()) {
        if (distance(v, exposed) < 1e-9) continue;
        if (std::abs(v.y - exposed.y) <= std::abs(v.x - exposed.x)) {
            leg_horizontal = distance(v, exposed);
        } else {
            leg_vertical = distance(v, exposed);
        }
    }

    Scenario2Report report;
    report.corner_pose = best.pose;
    report.leg1 = leg_horizontal;
    report.leg2 = leg_vertical;
    report.leg_diff = std::abs(leg_horizontal - leg_vertical);
    report.isosceles = report.leg_diff <= 1e-3;
    report.footprint_area = best.area;
    report.table_area = table.width * table.height;
    report.bookkeeping_ok =
        std::abs(report.footprint_area + 0.5 * report.leg1 * report.leg2 - report.table_area) <=
        1e-6;

    // Unrestricted solve at reduced resolution guards the corner restriction:
    // it may legitimately dip below when the table leaves the scenario.
    SearchConfig guard = config;
    guard.grid_xy = 32;
    guard.grid_theta = 48;
    guard.top_k_seeds = 8;
    report.cross_check_min_area = solve(laptop, table, guard).min_area;
    return report;
}

std::vector<SweepRow> sweep_tables(const LaptopSpec& laptop,
                                   const std::vector<std::pair<double, double>>& sizes,
                                   const SearchConfig& config) {
    if (sizes.empty()) {
        throw std::invalid_argument("sweep_tables: size list is empty");
    }
    std::vector<SweepRow> rows;
    rows.reserve(sizes.size());
    for (const auto& [w, h] : sizes) {
        const TableSpec table(w, h);
        const OptResult result = solve(laptop, table, config);
        SweepRow row;
        row.table_w = w;
        row.table_h = h;
        row.min_area = result.min_area;
        row.argmin_pose = result.argmin.front().pose;
        row.regime = classify_regime(laptop, table, kDefaultProbeSamples, config.seed);
        row.footprint_shape = footprint(laptop, table, row.argmin_pose).shape_class;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace laptopfit
