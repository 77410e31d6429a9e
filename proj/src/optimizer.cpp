#include "optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace laptopfit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kClusterDistance = 1e-3;

struct Evaluator {
    const LaptopSpec& laptop;
    const TableSpec& table;
    ConvexPolygon table_poly;
    long long evaluations = 0;

    Evaluator(const LaptopSpec& l, const TableSpec& t)
        : laptop(l), table(t), table_poly(t.polygon()) {}

    double operator()(const Pose& pose) {
        ++evaluations;
        return polygon_area(clip_convex(laptop_polygon(laptop, pose), table_poly));
    }
};

bool candidate_less(const Candidate& a, const Candidate& b) {
    if (a.area != b.area) return a.area < b.area;
    if (a.pose.cx != b.pose.cx) return a.pose.cx < b.pose.cx;
    if (a.pose.cy != b.pose.cy) return a.pose.cy < b.pose.cy;
    return a.pose.theta < b.pose.theta;
}

bool pose_lex_less(const Pose& a, const Pose& b) {
    if (a.cx != b.cx) return a.cx < b.cx;
    if (a.cy != b.cy) return a.cy < b.cy;
    return a.theta < b.theta;
}

void validate_config(const SearchConfig& c) {
    if (c.grid_xy <= 0 || c.grid_theta <= 0 || c.top_k_seeds <= 0 || c.refine_max_iters <= 0) {
        throw std::invalid_argument("SearchConfig: counts must be positive");
    }
    if (c.refine_initial_step_xy < 0.0 || c.refine_initial_step_theta < 0.0 ||
        !(c.refine_min_step > 0.0) || !(c.tie_tolerance >= 0.0)) {
        throw std::invalid_argument("SearchConfig: steps and tolerances must be positive");
    }
}

double initial_step_xy(const TableSpec& table, const SearchConfig& c) {
    return c.refine_initial_step_xy > 0.0 ? c.refine_initial_step_xy
                                          : table.min_side() / c.grid_xy;
}

double initial_step_theta(const SearchConfig& c) {
    return c.refine_initial_step_theta > 0.0 ? c.refine_initial_step_theta : kPi / c.grid_theta;
}

std::vector<Candidate> grid_search_impl(Evaluator& eval, const SearchConfig& config) {
    const double w = eval.table.width;
    const double h = eval.table.height;
    const int nx = config.grid_xy;
    const int nt = config.grid_theta;
    const int ix_hi = config.use_symmetry_reduction ? nx / 2 : nx;
    const int iy_hi = config.use_symmetry_reduction ? nx / 2 : nx;

    std::vector<Candidate> candidates;
    candidates.reserve(static_cast<std::size_t>(ix_hi + 1) * (iy_hi + 1) * nt *
                       (config.use_symmetry_reduction ? 4 : 1));
    for (int i = 0; i <= ix_hi; ++i) {
        const double cx = w * i / nx;
        for (int j = 0; j <= iy_hi; ++j) {
            const double cy = h * j / nx;
            for (int k = 0; k < nt; ++k) {
                const double theta = (k * kPi) / nt;
                const Pose pose{cx, cy, theta};
                const double area = eval(pose);
                if (!config.use_symmetry_reduction) {
                    candidates.push_back({pose, area});
                    continue;
                }
                // Reflect the evaluated quadrant node across the table axes;
                // the footprint area is invariant under both reflections.
                Pose images[4];
                int count = 0;
                for (int rx = 0; rx < 2; ++rx) {
                    for (int ry = 0; ry < 2; ++ry) {
                        Pose p = pose;
                        if (rx) p.cx = w - p.cx;
                        if (ry) p.cy = h - p.cy;
                        if (rx != ry) p.theta = canonical_angle(kPi - p.theta);
                        bool dup = false;
                        for (int q = 0; q < count; ++q) {
                            if (images[q].cx == p.cx && images[q].cy == p.cy &&
                                images[q].theta == p.theta) {
                                dup = true;
                                break;
                            }
                        }
                        if (!dup) images[count++] = p;
                    }
                }
                for (int q = 0; q < count; ++q) candidates.push_back({images[q], area});
            }
        }
    }

    const std::size_t keep =
        std::min<std::size_t>(static_cast<std::size_t>(config.top_k_seeds), candidates.size());
    std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(keep),
                      candidates.end(), candidate_less);
    candidates.resize(keep);
    return candidates;
}

Candidate refine_impl(Evaluator& eval, const Pose& seed_pose, const SearchConfig& config) {
    const double w = eval.table.width;
    const double h = eval.table.height;
    double step_x = initial_step_xy(eval.table, config);
    double step_y = step_x;
    double step_t = initial_step_theta(config);
    if (config.refine_min_step >= step_x || config.refine_min_step >= step_t) {
        throw std::invalid_argument("SearchConfig: refine_min_step must stay below the initial steps");
    }

    Pose best = make_pose(seed_pose.cx, seed_pose.cy, seed_pose.theta);
    double best_area = eval(best);

    for (int iter = 0; iter < config.refine_max_iters; ++iter) {
        bool improved = false;
        for (int move = 0; move < 6; ++move) {
            Pose cand = best;
            switch (move) {
                case 0: cand.cx = std::min(w, best.cx + step_x); break;
                case 1: cand.cx = std::max(0.0, best.cx - step_x); break;
                case 2: cand.cy = std::min(h, best.cy + step_y); break;
                case 3: cand.cy = std::max(0.0, best.cy - step_y); break;
                case 4: cand.theta = canonical_angle(best.theta + step_t); break;
                default: cand.theta = canonical_angle(best.theta - step_t); break;
            }
            if (cand.cx == best.cx && cand.cy == best.cy && cand.theta == best.theta) continue;
            const double area = eval(cand);
            if (area < best_area) {
                best = cand;
                best_area = area;
                improved = true;
            }
        }
        if (!improved) {
            step_x *= 0.5;
            step_y *= 0.5;
            step_t *= 0.5;
            if (step_x < config.refine_min_step && step_y < config.refine_min_step &&
                step_t < config.refine_min_step) {
                break;
            }
        }
    }
    return {best, best_area};
}

}  // namespace

double pose_distance(const Pose& a, const Pose& b) {
    const double dt_raw = std::abs(a.theta - b.theta);
    const double dt = std::min(dt_raw, kPi - dt_raw);
    return std::max({std::abs(a.cx - b.cx), std::abs(a.cy - b.cy), dt});
}

std::vector<Candidate> grid_search(const LaptopSpec& laptop, const TableSpec& table,
                                   const SearchConfig& config) {
    validate_config(config);
    Evaluator eval(laptop, table);
    return grid_search_impl(eval, config);
}

Candidate refine(const LaptopSpec& laptop, const TableSpec& table, const Pose& seed_pose,
                 const SearchConfig& config) {
    validate_config(config);
    if (!is_stable(seed_pose, table)) {
        throw UnstablePoseError("refine: seed pose is off the table");
    }
    Evaluator eval(laptop, table);
    return refine_impl(eval, seed_pose, config);
}

OptResult solve(const LaptopSpec& laptop, const TableSpec& table, const SearchConfig& config) {
    validate_config(config);
    Evaluator eval(laptop, table);

    const std::vector<Candidate> seeds = grid_search_impl(eval, config);
    std::vector<Candidate> refined;
    refined.reserve(seeds.size());
    for (const Candidate& seed : seeds) {
        refined.push_back(refine_impl(eval, seed.pose, config));
    }
    std::sort(refined.begin(), refined.end(), candidate_less);

    OptResult result;
    result.refined = true;
    result.min_area = refined.front().area;

    // Cluster near-optimal poses; the lexicographically smallest pose of each
    // cluster is its representative.
    std::vector<Candidate> ties;
    for (const Candidate& c : refined) {
        if (c.area <= result.min_area + config.tie_tolerance) ties.push_back(c);
    }
    std::sort(ties.begin(), ties.end(),
              [](const Candidate& a, const Candidate& b) { return pose_lex_less(a.pose, b.pose); });
    for (const Candidate& c : ties) {
        bool absorbed = false;
        for (const Candidate& rep : result.argmin) {
            if (pose_distance(rep.pose, c.pose) <= kClusterDistance) {
                absorbed = true;
                break;
            }
        }
        if (!absorbed) result.argmin.push_back(c);
    }

    // A one-parameter tie family (square laptop, fully covered table) shows up
    // as a flat theta profile at the best midpoint.
    const Pose& best = result.argmin.front().pose;
    double theta_min = std::numeric_limits<double>::infinity();
    double theta_max = -theta_min;
    for (int k = 0; k < config.grid_theta; ++k) {
        const double area = eval(Pose{best.cx, best.cy, (k * kPi) / config.grid_theta});
        theta_min = std::min(theta_min, area);
        theta_max = std::max(theta_max, area);
    }
    result.is_tie_family = (theta_max - theta_min) <= config.tie_tolerance;

    result.evaluations = eval.evaluations;
    return result;
}

}  // namespace laptopfit
