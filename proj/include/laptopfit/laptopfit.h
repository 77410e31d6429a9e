/*
 * laptopfit C API: minimal-footprint placement of a rectangular laptop on a
 * rectangular table.
 *
 * All lengths are in laptop-width units (the laptop's short side is exactly
 * 1). The table occupies [0, W] x [0, H]; a placement is stable when the
 * laptop midpoint lies on the closed table region. Angles are radians in
 * [0, pi), measured from the table x-axis to the laptop's long axis.
 *
 * Every function is deterministic for fixed inputs and seeds. Handles are
 * opaque; destroy functions accept NULL. Strings returned through `char**`
 * are owned by the caller and released with lf_string_free().
 */

#ifndef LAPTOPFIT_H
#define LAPTOPFIT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lf_status {
    LF_OK = 0,
    LF_ERROR_INVALID_ARGUMENT = 1,
    LF_ERROR_UNSTABLE_POSE = 2,
    LF_ERROR_WRONG_REGIME = 3,
    LF_ERROR_INTERNAL = 4
} lf_status;

/* Table-size regimes, ordered by the underlying thresholds. */
typedef enum lf_regime {
    LF_REGIME_FULL_TABLE = 0,
    LF_REGIME_CORNER_TRIANGLE = 1,
    LF_REGIME_COMPLEX = 2,
    LF_REGIME_CONJECTURED_QUARTER = 3,
    LF_REGIME_THEOREM = 4
} lf_regime;

typedef enum lf_verify_kind {
    LF_VERIFY_CONSTANCY = 0,    /* square laptop: corner footprint is always 1/4 */
    LF_VERIFY_CORNER_SWEEP = 1, /* non-square laptop: 1/4 lower bound over the corner sweep */
    LF_VERIFY_BOUNDS = 2,       /* random poses on a theorem-regime table */
    LF_VERIFY_SCENARIO2 = 3     /* small-table protruding-triangle analysis */
} lf_verify_kind;

/* Footprint shape by vertex count after sliver removal. */
typedef enum lf_shape_class {
    LF_SHAPE_EMPTY = 0,
    LF_SHAPE_TRIANGLE = 3,
    LF_SHAPE_QUADRILATERAL = 4,
    LF_SHAPE_PENTAGON = 5,
    LF_SHAPE_HEXAGON = 6,
    LF_SHAPE_HEPTAGON = 7,
    LF_SHAPE_OCTAGON = 8
} lf_shape_class;

typedef struct lf_problem lf_problem;
typedef struct lf_solution lf_solution;
typedef struct lf_report lf_report;
typedef struct lf_sweep lf_sweep;

const char* lf_version(void);
const char* lf_status_message(lf_status status);
const char* lf_regime_name(lf_regime regime);
const char* lf_shape_class_name(lf_shape_class shape);
void lf_string_free(char* text);

/* A problem instance bundles the laptop, the table and the search settings.
 * laptop_length >= 1; table sides positive. */
lf_status lf_problem_create(double laptop_length, double table_w, double table_h,
                            lf_problem** out_problem);
void lf_problem_destroy(lf_problem* problem);

lf_status lf_problem_set_seed(lf_problem* problem, uint64_t seed);
lf_status lf_problem_set_grid(lf_problem* problem, int grid_xy, int grid_theta);
lf_status lf_problem_set_top_k(lf_problem* problem, int top_k_seeds);
lf_status lf_problem_set_tie_tolerance(lf_problem* problem, double tie_tolerance);
lf_status lf_problem_set_refinement(lf_problem* problem, double min_step, int max_iters);
/* Initial pattern-search steps; pass 0 for the defaults derived from the grid. */
lf_status lf_problem_set_refine_steps(lf_problem* problem, double step_xy, double step_theta);
lf_status lf_problem_set_symmetry_reduction(lf_problem* problem, int enabled);

/* Stability test; writes 1 or 0. */
lf_status lf_is_stable(const lf_problem* problem, double cx, double cy, int* out_stable);

/* Footprint of a single placement. Any output pointer may be NULL. Fails with
 * LF_ERROR_UNSTABLE_POSE when the midpoint is off the table. */
lf_status lf_footprint(const lf_problem* problem, double cx, double cy, double theta,
                       double* out_area, int* out_vertex_count, lf_shape_class* out_shape,
                       int* out_isosceles_right);

/* Global minimization over stable poses. */
lf_status lf_solve(const lf_problem* problem, lf_solution** out_solution);
void lf_solution_destroy(lf_solution* solution);
double lf_solution_min_area(const lf_solution* solution);
int lf_solution_argmin_count(const lf_solution* solution);
lf_status lf_solution_argmin_pose(const lf_solution* solution, int index, double* out_cx,
                                  double* out_cy, double* out_theta, double* out_area);
int lf_solution_is_tie_family(const lf_solution* solution);
long long lf_solution_evaluations(const lf_solution* solution);
lf_status lf_solution_json(const lf_solution* solution, char** out_json);

/* Verification runs. `samples` counts theta samples for CONSTANCY and
 * CORNER_SWEEP, random poses for BOUNDS; <= 0 picks the default (360 and
 * 100000) and values above 10^9 are rejected. SCENARIO2 ignores both samples
 * and seed. */
lf_status lf_verify(const lf_problem* problem, lf_verify_kind kind, long long samples,
                    uint64_t seed, lf_report** out_report);
void lf_report_destroy(lf_report* report);
const char* lf_report_name(const lf_report* report);
int lf_report_passed(const lf_report* report);
double lf_report_max_deviation(const lf_report* report);
long long lf_report_samples(const lf_report* report);
lf_status lf_report_json(const lf_report* report, char** out_json);

/* Table-size regime; probe_samples <= 0 picks the default (20000). */
lf_status lf_classify(const lf_problem* problem, long long probe_samples, uint64_t seed,
                      lf_regime* out_regime);

typedef struct lf_scenario2_result {
    double corner_cx;
    double corner_cy;
    double theta;
    double leg1; /* along the horizontal table edge */
    double leg2; /* along the vertical table edge */
    double leg_diff;
    int is_isosceles;
    double footprint_area;
    double cross_check_min_area; /* unrestricted solve at reduced resolution */
} lf_scenario2_result;

/* Small-table analysis: best midpoint-on-corner placement whose protruding
 * piece is a single triangle at one table corner. Fails with
 * LF_ERROR_WRONG_REGIME outside the small-table regimes. */
lf_status lf_scenario2_analyze(const lf_problem* problem, lf_scenario2_result* out_result);

/* Solves one table per (W, H) pair; sizes_wh holds 2*size_count doubles. The
 * problem's table dimensions are ignored here. */
lf_status lf_sweep_run(const lf_problem* problem, const double* sizes_wh, int size_count,
                       lf_sweep** out_sweep);
void lf_sweep_destroy(lf_sweep* sweep);
int lf_sweep_row_count(const lf_sweep* sweep);
lf_status lf_sweep_row(const lf_sweep* sweep, int index, double* out_table_w, double* out_table_h,
                       double* out_min_area, double* out_cx, double* out_cy, double* out_theta,
                       lf_regime* out_regime, lf_shape_class* out_shape);
lf_status lf_sweep_csv(const lf_sweep* sweep, char** out_csv);
lf_status lf_sweep_json(const lf_sweep* sweep, char** out_json);

/* SVG drawing of one placement (table, laptop outline, filled footprint). */
lf_status lf_render_svg(const lf_problem* problem, double cx, double cy, double theta,
                        double scale_px_per_unit, char** out_svg);

#ifdef __cplusplus
}
#endif

#endif /* LAPTOPFIT_H */
