#include "laptopfit/laptopfit.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "optimizer.hpp"
#include "placement.hpp"
#include "report.hpp"

using namespace laptopfit;

struct lf_problem {
    double laptop_length;
    double table_w;
    double table_h;
    SearchConfig config;
};

struct lf_solution {
    OptResult result;
};

struct lf_report {
    VerificationReport report;
};

struct lf_sweep {
    std::vector<SweepRow> rows;
};

namespace {

lf_status translate_exception() {
    try {
        throw;
    } catch (const UnstablePoseError&) {
        return LF_ERROR_UNSTABLE_POSE;
    } catch (const RegimeError&) {
        return LF_ERROR_WRONG_REGIME;
    } catch (const std::invalid_argument&) {
        return LF_ERROR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        return LF_ERROR_INTERNAL;
    } catch (...) {
        return LF_ERROR_INTERNAL;
    }
}

template <typename Fn>
lf_status guarded(Fn&& fn) {
    try {
        fn();
        return LF_OK;
    } catch (...) {
        return translate_exception();
    }
}

char* copy_string(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

LaptopSpec laptop_of(const lf_problem& p) {
    return LaptopSpec(p.laptop_length);
}

TableSpec table_of(const lf_problem& p) {
    return TableSpec(p.table_w, p.table_h);
}

lf_regime to_c_regime(Regime r) {
    switch (r) {
        case Regime::FullTable: return LF_REGIME_FULL_TABLE;
        case Regime::CornerTriangle: return LF_REGIME_CORNER_TRIANGLE;
        case Regime::Complex: return LF_REGIME_COMPLEX;
        case Regime::ConjecturedQuarter: return LF_REGIME_CONJECTURED_QUARTER;
        case Regime::TheoremRegime: return LF_REGIME_THEOREM;
    }
    return LF_REGIME_COMPLEX;
}

lf_shape_class to_c_shape(ShapeClass s) {
    switch (s) {
        case ShapeClass::Empty: return LF_SHAPE_EMPTY;
        case ShapeClass::Triangle: return LF_SHAPE_TRIANGLE;
        case ShapeClass::Quadrilateral: return LF_SHAPE_QUADRILATERAL;
        case ShapeClass::Pentagon: return LF_SHAPE_PENTAGON;
        case ShapeClass::Hexagon: return LF_SHAPE_HEXAGON;
        case ShapeClass::Heptagon: return LF_SHAPE_HEPTAGON;
        case ShapeClass::Octagon: return LF_SHAPE_OCTAGON;
    }
    return LF_SHAPE_EMPTY;
}

VerificationReport scenario2_as_report(const LaptopSpec& laptop, const TableSpec& table,
                                       const SearchConfig& config) {
    const Scenario2Report s2 = scenario2_analyze(laptop, table, config);
    VerificationReport report;
    report.name = "scenario2";
    report.passed = s2.bookkeeping_ok;
    report.max_deviation =
        std::abs(s2.footprint_area + 0.5 * s2.leg1 * s2.leg2 - s2.table_area);
    report.samples = 0;
    report.details.push_back({s2.corner_pose.theta, s2.leg1, s2.leg2});
    report.details.push_back({s2.leg_diff, s2.footprint_area, s2.cross_check_min_area});
    return report;
}

}  // namespace

extern "C" {

const char* lf_version(void) {
    return "1.0.0";
}

const char* lf_status_message(lf_status status) {
    switch (status) {
        case LF_OK: return "ok";
        case LF_ERROR_INVALID_ARGUMENT: return "invalid argument";
        case LF_ERROR_UNSTABLE_POSE: return "unstable pose: laptop midpoint is off the table";
        case LF_ERROR_WRONG_REGIME: return "operation does not apply to this table-size regime";
        case LF_ERROR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* lf_regime_name(lf_regime regime) {
    switch (regime) {
        case LF_REGIME_FULL_TABLE: return "FullTable";
        case LF_REGIME_CORNER_TRIANGLE: return "CornerTriangle";
        case LF_REGIME_COMPLEX: return "Complex";
        case LF_REGIME_CONJECTURED_QUARTER: return "ConjecturedQuarter";
        case LF_REGIME_THEOREM: return "TheoremRegime";
    }
    return "Complex";
}

const char* lf_shape_class_name(lf_shape_class shape) {
    switch (shape) {
        case LF_SHAPE_EMPTY: return "Empty";
        case LF_SHAPE_TRIANGLE: return "Triangle";
        case LF_SHAPE_QUADRILATERAL: return "Quadrilateral";
        case LF_SHAPE_PENTAGON: return "Pentagon";
        case LF_SHAPE_HEXAGON: return "Hexagon";
        case LF_SHAPE_HEPTAGON: return "Heptagon";
        case LF_SHAPE_OCTAGON: return "Octagon";
    }
    return "Empty";
}

void lf_string_free(char* text) {
    delete[] text;
}

lf_status lf_problem_create(double laptop_length, double table_w, double table_h,
                            lf_problem** out_problem) {
    if (out_problem == nullptr) return LF_ERROR_INVALID_ARGUMENT;
    *out_problem = nullptr;
    return guarded([&] {
        LaptopSpec laptop(laptop_length);  // validates
        TableSpec table(table_w, table_h);
        (void)laptop;
        (void)table;
        *out_problem = new lf_problem{laptop_length, table_w, table_h, SearchConfig{}};
    });
}

void lf_problem_destroy(lf_problem* problem) {
    delete problem;
}

lf_status lf_problem_set_seed(lf_problem* problem, uint64_t seed) {
    if (problem == nullptr) return LF_ERROR_INVALID_ARGUMENT;
    problem->config.seed = seed;
    return LF_OK;
}

lf_status lf_problem_set_grid(lf_problem* problem, int grid_xy, int grid_theta) {
    if (problem == nullptr || grid_xy <= 0 || grid_theta <= 0) return LF_ERROR_INVALID_ARGUMENT;
    problem->config.grid_xy = grid_xy;
    problem->config.grid_theta = grid_theta;
    return LF_OK;
}

lf_status lf_problem_set_top_k(lf_problem* problem, int top_k_seeds) {
    if (problem == nullptr || top_k_seeds <= 0) return LF_ERROR_INVALID_ARGUMENT;
    problem->config.top_k_seeds = top_k_seeds;
    return LF_OK;
}

lf_status lf_problem_set_tie_tolerance(lf_problem* problem, double tie_tolerance) {
    if (problem == nullptr || !(tie_tolerance >= 0.0)) return LF_ERROR_INVALID_ARGUMENT;
    problem->config.tie_tolerance = tie_tolerance;
    return LF_OK;
}

lf_status lf_problem_set_refinement(lf_problem* problem, double min_step, int max_iters) {
    if (problem == nullptr || !(min_step > 0.0) || max_iters <= 0) {
        return LF_ERROR_INVALID_ARGUMENT;
    }
    problem->config.refine_min_step = min_step;
    problem->config.refine_max_iters = max_iters;
    return LF_OK;
}

lf_status lf_problem_set_refine_steps(lf_problem* problem, double step_xy, double step_theta) {
    if (problem == nullptr || step_xy < 0.0 || step_theta < 0.0) return LF_ERROR_INVALID_ARGUMENT;
    problem->config.refine_initial_step_xy = step_xy;
    problem->config.refine_initial_step_theta = step_theta;
    return LF_OK;
}

lf_status lf_problem_set_symmetry_reduction(lf_problem* problem, int enabled) {
    if (problem == nullptr) return LF_ERROR_INVALID_ARGUMENT;
    problem->config.use_symmetry_reduction = enabled != 0;
    return LF_OK;
}

lf_status lf_is_stable(const lf_problem* problem, double cx, double cy, int* out_stable) {
    if (problem == nullptr || out_stable == nullptr) return LF_ERROR_INVALID_ARGUMENT;
    return guarded([&] {
        *out_stable = is_stable(Pose{cx, cy, 0.0}, table_of(*problem)) ? 1 : 0;
    });
}

lf_status lf_footprint(const lf_problem* problem, double cx, double cy, double theta,
                       double* out_area, int* out_vertex_count, lf_shape_class* out_shape,
                       int* out_isosceles_right) {
    if (problem == nullptr) return LF_ERROR_INVALID_ARGUMENT;
    return guarded([&] {
        const FootprintReport r =
            footprint(laptop_of(*problem), table_of(*problem), make_pose(cx, cy, theta));
        if (out_area != nullptr) *out_area = r.area;
        if (out_vertex_count != nullptr) *out_vertex_count = r.vertex_count;
        if (out_shape != nullptr) *out_shape = to_c_shape(r.shape_class);
        if (out_isosceles_right != nullptr) {
            *out_isosceles_right = r.is_isosceles_right_triangle ? 1 : 0;
        }
    });
}

lf_status lf_solve(const lf_problem* problem, lf_solution** out_solution) {
    if (problem == nullptr || out_solution == nullptr) return LF_ERROR_INVALID_ARGUMENT;
    *out_solution = nullptr;
    return guarded([&] {
        *out_solution =
            new lf_solution{solve(laptop_of(*problem), table_of(*problem), problem->config)};
    });
}

void lf_solution_destroy(lf_solution* solution) {
    delete solution;
}

double lf_solution_min_area(const lf_solution* solution) {
    return solution == nullptr ? -1.0 : solution->result.min_area;
}

int lf_solution_argmin_count(const lf_solution* solution) {
    return solution == nullptr ? 0 : static_cast<int>(solution->result.argmin.size());
}

lf_status lf_solution_argmin_pose(const lf_solution* solution, int index, double* out_cx,
                                  double* out_cy, double* out_theta, double* out_area) {
    if (solution == nullptr || index < 0 ||
        index >= static_cast<int>(solution->result.argmin.size())) {
        return LF_ERROR_INVALID_ARGUMENT;
    }
    const Candidate& c = solution->result.argmin[static_cast<std::size_t>(index)];
    if (out_cx != nullptr) *out_cx = c.pose.cx;
    if (out_cy != nullptr) *out_cy = c.pose.cy;
    if (out_theta != nullptr) *out_theta = c.pose.theta;
    if (out_area != nullptr) *out_area = c.area;
    return LF_OK;
}

int lf_solution_is_tie_family(const lf_solution* solution) {
    return solution != nullptr && solution->result.is_tie_family ? 1 : 0;
}

long long lf_solution_evaluations(const lf_solution* solution) {
    return solution == nullptr ? 0 : solution->result.evaluations;
}

lf_status lf_solution_json(const lf_solution* solution, char** out_json) {
    if (solution == nullptr || out_json == nullptr) return LF_ERROR_INVALID_ARGUMENT;
    return guarded([&] { *out_json = copy_string(emit_json(solution->result)); });
}

lf_status lf_verify(const lf_problem* problem, lf_verify_kind kind, long long samples,
                    uint64_t seed, lf_report** out_report) {
    if (problem == nullptr || out_report == nullptr) return LF_ERROR_INVALID_ARGUMENT;
    *out_report = nullptr;
    if (samples > 1000000000) return LF_ERROR_INVALID_ARGUMENT;
    return guarded([&] {
        const LaptopSpec laptop = laptop_of(*problem);
        const TableSpec table = table_of(*problem);
        VerificationReport report;
        switch (kind) {
            case LF_VERIFY_CONSTANCY:
                report = verify_corner_constancy(laptop, table,
                                                 samples > 0 ? static_cast<int>(samples) : 360);
                break;
            case LF_VERIFY_CORNER_SWEEP:
                report = verify_corner_sweep(laptop, table,
                                             samples > 0 ? static_cast<int>(samples) : 360);
                break;
            case LF_VERIFY_BOUNDS:
                report = verify_bounds(laptop, table, samples > 0 ? samples : 100000, seed);
                break;
            case LF_VERIFY_SCENARIO2:
                report = scenario2_as_report(laptop, table, problem->config);
                break;
            default:
                throw std::invalid_argument("lf_verify: unknown kind");
        }
        *out_report = new lf_report{std::move(report)};
    });
}

void lf_report_destroy(lf_report* report) {
    delete report;
}

const char* lf_report_name(const lf_report* report) {
    return report == nullptr ? "" : report->report.name.c_str();
}

int lf_report_passed(const lf_report* report) {
    return report != nullptr && report->report.passed ? 1 : 0;
}

double lf_report_max_deviation(const lf_report* report) {
    return report == nullptr ? -1.0 : report->report.max_deviation;
}

long long lf_report_samples(const lf_report* report) {
    return report == nullptr ? 0 : report->report.samples;
}

lf_status lf_report_json(const lf_report* report, char** out_json) {
    if (report == nullptr || out_json == nullptr) return LF_ERROR_INVALID_ARGUMENT;
    return guarded([&] { *out_json = copy_string(emit_json(report->report)); });
}

lf_status lf_classify(const lf_problem* problem, long long probe_samples, uint64_t seed,
                      lf_regime* out_regime) {
    if (problem == nullptr || out_regime == nullptr) return LF_ERROR_INVALID_ARGUMENT;
    return guarded([&] {
        *out_regime =
            to_c_regime(classify_regime(laptop_of(*problem), table_of(*problem), probe_samples,
                                        seed));
    });
}

lf_status lf_scenario2_analyze(const lf_problem* problem, lf_scenario2_result* out_result) {
    if (problem == nullptr || out_result == nullptr) return LF_ERROR_INVALID_ARGUMENT;
    return guarded([&] {
        const Scenario2Report s2 =
            scenario2_analyze(laptop_of(*problem), table_of(*problem), problem->config);
        out_result->corner_cx = s2.corner_pose.cx;
        out_result->corner_cy = s2.corner_pose.cy;
        out_result->theta = s2.corner_pose.theta;
        out_result->leg1 = s2.leg1;
        out_result->leg2 = s2.leg2;
        out_result->leg_diff = s2.leg_diff;
        out_result->is_isosceles = s2.isosceles ? 1 : 0;
        out_result->footprint_area = s2.footprint_area;
        out_result->cross_check_min_area = s2.cross_check_min_area;
    });
}

lf_status lf_sweep_run(const lf_problem* problem, const double* sizes_wh, int size_count,
                       lf_sweep** out_sweep) {
    if (problem == nullptr || sizes_wh == nullptr || size_count <= 0 || out_sweep == nullptr) {
        return LF_ERROR_INVALID_ARGUMENT;
    }
    *out_sweep = nullptr;
    return guarded([&] {
        std::vector<std::pair<double, double>> sizes;
        sizes.reserve(static_cast<std::size_t>(size_count));
        for (int i = 0; i < size_count; ++i) {
            sizes.emplace_back(sizes_wh[2 * i], sizes_wh[2 * i + 1]);
        }
        *out_sweep = new lf_sweep{sweep_tables(laptop_of(*problem), sizes, problem->config)};
    });
}

void lf_sweep_destroy(lf_sweep* sweep) {
    delete sweep;
}

int lf_sweep_row_count(const lf_sweep* sweep) {
    return sweep == nullptr ? 0 : static_cast<int>(sweep->rows.size());
}

lf_status lf_sweep_row(const lf_sweep* sweep, int index, double* out_table_w, double* out_table_h,
                       double* out_min_area, double* out_cx, double* out_cy, double* out_theta,
                       lf_regime* out_regime, lf_shape_class* out_shape) {
    if (sweep == nullptr || index < 0 || index >= static_cast<int>(sweep->rows.size())) {
        return LF_ERROR_INVALID_ARGUMENT;
    }
    const SweepRow& row = sweep->rows[static_cast<std::size_t>(index)];
    if (out_table_w != nullptr) *out_table_w = row.table_w;
    if (out_table_h != nullptr) *out_table_h = row.table_h;
    if (out_min_area != nullptr) *out_min_area = row.min_area;
    if (out_cx != nullptr) *out_cx = row.argmin_pose.cx;
    if (out_cy != nullptr) *out_cy = row.argmin_pose.cy;
    if (out_theta != nullptr) *out_theta = row.argmin_pose.theta;
    if (out_regime != nullptr) *out_regime = to_c_regime(row.regime);
    if (out_shape != nullptr) *out_shape = to_c_shape(row.footprint_shape);
    return LF_OK;
}

lf_status lf_sweep_csv(const lf_sweep* sweep, char** out_csv) {
    if (sweep == nullptr || out_csv == nullptr) return LF_ERROR_INVALID_ARGUMENT;
    return guarded([&] { *out_csv = copy_string(emit_csv(sweep->rows)); });
}

lf_status lf_sweep_json(const lf_sweep* sweep, char** out_json) {
    if (sweep == nullptr || out_json == nullptr) return LF_ERROR_INVALID_ARGUMENT;
    return guarded([&] { *out_json = copy_string(emit_json(sweep->rows)); });
}

lf_status lf_render_svg(const lf_problem* problem, double cx, double cy, double theta,
                        double scale_px_per_unit, char** out_svg) {
    if (problem == nullptr || out_svg == nullptr) return LF_ERROR_INVALID_ARGUMENT;
    return guarded([&] {
        const Scene scene =
            make_scene(laptop_of(*problem), table_of(*problem), make_pose(cx, cy, theta));
        *out_svg = copy_string(render_svg(scene, scale_px_per_unit));
    });
}

}  // extern "C"
