#include <doctest.h>

#include <cmath>
#include <numbers>

#include "analysis.hpp"
#include "oracles.hpp"

using namespace laptopfit;

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

const DetailRow* row_at_input(const VerificationReport& report, double input, double tol) {
    for (const DetailRow& row : report.details) {
        if (std::abs(row.input - input) <= tol) return &row;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("corner constancy holds on a roomy table") {
    const VerificationReport r = verify_corner_constancy(LaptopSpec(1.0), TableSpec(2, 2), 360);
    CHECK(r.passed);
    CHECK(r.max_deviation <= 1e-9);
    CHECK(r.samples == 360);
    CHECK(r.details.size() == 360);
    CHECK(r.name.find("met") != std::string::npos);
}

TEST_CASE("corner constancy holds at the 1/sqrt(2) validity boundary") {
    const VerificationReport r =
        verify_corner_constancy(LaptopSpec(1.0), TableSpec(kInvSqrt2, kInvSqrt2), 360);
    CHECK(r.passed);
    CHECK(r.max_deviation <= 1e-9);
}

TEST_CASE("corner constancy fails below the boundary, worst at 45 degrees") {
    const VerificationReport r =
        verify_corner_constancy(LaptopSpec(1.0), TableSpec(0.6, 0.6), 360);
    CHECK_FALSE(r.passed);
    CHECK(r.name.find("unmet") != std::string::npos);
    // the far table edges clip the corner triangle; the loss is (1/sqrt2 - 0.6)^2
    const double expected_dev = (kInvSqrt2 - 0.6) * (kInvSqrt2 - 0.6);
    CHECK(r.max_deviation == doctest::Approx(expected_dev).epsilon(1e-9));
    const DetailRow* worst = row_at_input(r, kPi / 4, 1e-12);
    REQUIRE(worst != nullptr);
    CHECK(std::abs(0.25 - worst->measured) >= r.max_deviation - 1e-12);
}

TEST_CASE("corner constancy input validation") {
    CHECK_THROWS_AS(verify_corner_constancy(LaptopSpec(1.5), TableSpec(2, 2), 360),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_corner_constancy(LaptopSpec(1.0), TableSpec(2, 2), 3),
                    std::invalid_argument);
}

TEST_CASE("corner sweep: quarter rectangle at zero, quarter at the symmetric orientation") {
    const VerificationReport r = verify_corner_sweep(LaptopSpec(1.5), TableSpec(2, 2), 360);
    CHECK(r.passed);
    const DetailRow* at_zero = row_at_input(r, 0.0, 1e-15);
    REQUIRE(at_zero != nullptr);
    CHECK(at_zero->measured == doctest::Approx(0.375).epsilon(1e-9));
    double min_area = 1e9;
    for (const DetailRow& row : r.details) min_area = std::min(min_area, row.measured);
    CHECK(std::abs(min_area - 0.25) <= 1e-9);
}

TEST_CASE("corner sweep for the double-length laptop") {
    const VerificationReport r = verify_corner_sweep(LaptopSpec(2.0), TableSpec(2, 2), 360);
    CHECK(r.passed);
    const DetailRow* at_zero = row_at_input(r, 0.0, 1e-15);
    REQUIRE(at_zero != nullptr);
    CHECK(at_zero->measured == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("corner sweep resolves a barely non-square laptop") {
    const VerificationReport r = verify_corner_sweep(LaptopSpec(1.1), TableSpec(2, 2), 720);
    CHECK(r.passed);
}

TEST_CASE("corner sweep validation") {
    CHECK_THROWS_AS(verify_corner_sweep(LaptopSpec(1.0), TableSpec(2, 2), 360),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_corner_sweep(LaptopSpec(1.5), TableSpec(0.5, 2), 360), RegimeError);
}

TEST_CASE("bounds verification passes across theorem-regime tables") {
    CHECK(verify_bounds(LaptopSpec(1.5), TableSpec(1, 1.5), 100000, 7).passed);
    CHECK(verify_bounds(LaptopSpec(1.0),
                        TableSpec(thresholds::big_square_side, thresholds::big_square_side),
                        100000, 7)
              .passed);
    CHECK(verify_bounds(LaptopSpec(3.0), TableSpec(1, 1), 100000, 7).passed);
}

TEST_CASE("bounds verification rejects small tables and is reproducible") {
    CHECK_THROWS_AS(verify_bounds(LaptopSpec(1.5), TableSpec(0.9, 2), 1000, 7), RegimeError);
    const VerificationReport a = verify_bounds(LaptopSpec(1.5), TableSpec(1, 1), 20000, 3);
    const VerificationReport b = verify_bounds(LaptopSpec(1.5), TableSpec(1, 1), 20000, 3);
    CHECK(a.max_deviation == b.max_deviation);
    REQUIRE(a.details.size() == b.details.size());
    for (std::size_t i = 0; i < a.details.size(); ++i) {
        CHECK(a.details[i].input == b.details[i].input);
        CHECK(a.details[i].measured == b.details[i].measured);
    }
}

TEST_CASE("regime thresholds are honored exactly") {
    const LaptopSpec laptop(1.2);
    CHECK(classify_regime(laptop, TableSpec(0.3, 0.4), 1000, 0) == Regime::FullTable);
    CHECK(classify_regime(laptop, TableSpec(1.0, 1.7), 1000, 0) == Regime::TheoremRegime);
    CHECK(classify_regime(laptop, TableSpec(thresholds::corner_leg, 0.9), 1000, 0) ==
          Regime::ConjecturedQuarter);
    // one ulp below the threshold double is genuinely below it
    CHECK(classify_regime(laptop, TableSpec(1.0 / std::sqrt(2.0), 0.9), 20000, 0) !=
          Regime::ConjecturedQuarter);
    CHECK(classify_regime(laptop, TableSpec(2, 2), 1000, 0) == Regime::TheoremRegime);
}

TEST_CASE("probing separates corner-triangle tables from complex ones") {
    CHECK(classify_regime(LaptopSpec(1.5), TableSpec(0.28, 0.45), 20000, 1) ==
          Regime::CornerTriangle);
    CHECK(classify_regime(LaptopSpec(1.5), TableSpec(0.37, 0.37), 20000, 1) ==
          Regime::CornerTriangle);
    // tall thin table: a near-axis-aligned laptop leaves a two-corner strip
    CHECK(classify_regime(LaptopSpec(1.5), TableSpec(0.06, 0.52), 20000, 1) == Regime::Complex);
    // wide table below the corner-leg threshold
    CHECK(classify_regime(LaptopSpec(1.5), TableSpec(0.5, 2.5), 20000, 1) == Regime::Complex);
}

TEST_CASE("scenario-2 square table: the optimal protruding triangle is isosceles") {
    const Scenario2Report r = scenario2_analyze(LaptopSpec(1.5), TableSpec(0.37, 0.37), {});
    CHECK(r.leg_diff <= 1e-3);
    CHECK(r.isosceles);
    CHECK(r.bookkeeping_ok);
    // independent closed-form maximizer
    const auto oracle = oracles::best_corner_cut(0.37, 0.37);
    REQUIRE(oracle.has_value());
    CHECK(r.leg1 == doctest::Approx(oracle->cut.leg_horizontal).epsilon(1e-3));
    CHECK(r.leg2 == doctest::Approx(oracle->cut.leg_vertical).epsilon(1e-3));
    CHECK(r.leg1 == doctest::Approx(0.0328932188).epsilon(1e-4));
    CHECK(r.footprint_area ==
          doctest::Approx(0.37 * 0.37 - oracle->cut.area()).epsilon(1e-6));
    // best placement pins the midpoint on a corner at the symmetric orientation
    CHECK(r.corner_pose.cx == 0.0);
    CHECK(r.corner_pose.cy == 0.0);
    CHECK(std::abs(r.corner_pose.theta - 3 * kPi / 4) <= 1e-3);
}

TEST_CASE("scenario-2 thin table: non-isosceles, diagonal nearly perpendicular") {
    const Scenario2Report r = scenario2_analyze(LaptopSpec(1.5), TableSpec(0.06, 0.52), {});
    CHECK(r.leg_diff > 1e-2);
    CHECK_FALSE(r.isosceles);
    CHECK(r.bookkeeping_ok);
    const auto oracle = oracles::best_corner_cut(0.06, 0.52);
    REQUIRE(oracle.has_value());
    CHECK(std::abs(r.leg_diff - (oracle->cut.leg_horizontal - oracle->cut.leg_vertical)) <= 1e-3);
    // the oracle's optimal cut direction phi maps to theta = pi/2 + phi
    CHECK(std::abs(r.corner_pose.theta - (kPi / 2 + oracle->phi)) <= 2e-3);
    // the corner restriction is a true restriction here: the unrestricted
    // optimum slides the laptop along the table and beats the triangle
    CHECK(r.cross_check_min_area <= r.footprint_area + 1e-9);
}

TEST_CASE("scenario-2 rejects tables outside the small regimes") {
    CHECK_THROWS_AS(scenario2_analyze(LaptopSpec(1.5), TableSpec(0.3, 0.4), {}), RegimeError);
    CHECK_THROWS_AS(scenario2_analyze(LaptopSpec(1.5), TableSpec(2, 2), {}), RegimeError);
}

TEST_CASE("table sweep rows carry solutions and regime labels") {
    SearchConfig config;
    config.grid_xy = 32;
    config.grid_theta = 48;
    const std::vector<SweepRow> rows = sweep_tables(
        LaptopSpec(1.5), {{0.3, 0.3}, {0.4, 0.4}, {0.8, 0.8}, {1.0, 1.0}, {2.0, 2.0}}, config);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].regime == Regime::FullTable);
    CHECK(rows[0].min_area == doctest::Approx(0.09).epsilon(1e-9));
    CHECK(rows[1].regime == Regime::CornerTriangle);
    CHECK(rows[2].regime == Regime::ConjecturedQuarter);
    CHECK(rows[3].regime == Regime::TheoremRegime);
    CHECK(rows[4].regime == Regime::TheoremRegime);
    CHECK(std::abs(rows[4].min_area - 0.25) <= 5e-4);
    for (const SweepRow& row : rows) {
        CHECK(row.min_area <= 0.25 + 1e-9);
        if (row.regime == Regime::FullTable) {
            CHECK(std::abs(row.min_area - row.table_w * row.table_h) <= 1e-9);
        }
    }
    CHECK_THROWS_AS(sweep_tables(LaptopSpec(1.5), {}, config), std::invalid_argument);
}

TEST_CASE("symmetric corner poses attain the quarter bound on any corner") {
    const LaptopSpec laptop(1.8);
    const TableSpec table(1.4, 2.0);
    for (int corner = 0; corner < 4; ++corner) {
        const Pose pose = symmetric_corner_pose(table, corner);
        CHECK(footprint_area(laptop, table, pose) == doctest::Approx(0.25).epsilon(1e-12));
    }
}

TEST_CASE("threshold constants") {
    CHECK(thresholds::half_width == 0.5);
    CHECK(thresholds::corner_leg == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(thresholds::theorem_min_side == 1.0);
    CHECK(thresholds::big_square_side == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}
