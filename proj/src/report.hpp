#pragma once

#include <string>
#include <utility>
#include <vector>

#include "analysis.hpp"
#include "optimizer.hpp"
#include "placement.hpp"

namespace laptopfit {

struct Scene {
    TableSpec table;
    LaptopSpec laptop;
    Pose pose;
    FootprintReport footprint;
    std::vector<std::pair<std::string, Point2>> annotations;
};

Scene make_scene(const LaptopSpec& laptop, const TableSpec& table, const Pose& pose);

// SVG 1.1 drawing: gray table, outlined laptop, filled footprint, midpoint
// dot and an area label. The viewBox covers the union box plus a 10% margin.
std::string render_svg(const Scene& scene, double scale_px_per_unit = 200.0);

// 12-significant-digit serialization, '.' decimal separator regardless of
// locale; all emitters are byte-deterministic for identical inputs.
std::string format_number(double value);

std::string emit_json(const OptResult& result);
std::string emit_json(const VerificationReport& report);
std::string emit_json(const std::vector<SweepRow>& rows);
std::string emit_csv(const std::vector<SweepRow>& rows);

}  // namespace laptopfit
