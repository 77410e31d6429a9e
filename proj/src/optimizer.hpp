#pragma once

#include <cstdint>
#include <vector>

#include "placement.hpp"

namespace laptopfit {

struct SearchConfig {
    int grid_xy = 64;     // intervals per table axis; endpoints included
    int grid_theta = 96;  // samples over [0, pi)
    double refine_initial_step_xy = 0.0;     // 0 = min(W, H) / grid_xy
    double refine_initial_step_theta = 0.0;  // 0 = pi / grid_theta
    double refine_min_step = 1e-10;
    int refine_max_iters = 200;
    double tie_tolerance = 1e-6;  // area units
    int top_k_seeds = 16;
    bool use_symmetry_reduction = true;
    std::uint64_t seed = 0;
};

struct Candidate {
    Pose pose;
    double area = 0.0;
};

struct OptResult {
    double min_area = 0.0;
    std::vector<Candidate> argmin;  // distinct optima within tie_tolerance, lex ordered
    bool is_tie_family = false;
    long long evaluations = 0;
    bool refined = false;
};

// max(|dcx|, |dcy|, angular distance in [0, pi)) between two poses.
double pose_distance(const Pose& a, const Pose& b);

// Deterministic coarse pass: footprint area on the inclusive (cx, cy) grid
// times the theta grid, quotiented to one table quadrant when symmetry
// reduction is on (results are reflected back). Returns the top_k_seeds best
// candidates ordered by (area, cx, cy, theta).
std::vector<Candidate> grid_search(const LaptopSpec& laptop, const TableSpec& table,
                                   const SearchConfig& config);

// Compass pattern search over (cx, cy, theta); cx/cy clamp to the stable
// region, theta wraps mod pi. Steps halve together on failure.
Candidate refine(const LaptopSpec& laptop, const TableSpec& table, const Pose& seed_pose,
                 const SearchConfig& config);

// Grid search, refinement of the top seeds, tie clustering and tie-family
// detection. Deterministic for a fixed config.
OptResult solve(const LaptopSpec& laptop, const TableSpec& table,
                const SearchConfig& config = {});

}  // namespace laptopfit
