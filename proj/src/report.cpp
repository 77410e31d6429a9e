#include "report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace laptopfit {

namespace {

constexpr const char* kTableFill = "#DDDDDD";
constexpr const char* kLaptopStroke = "#333333";
constexpr const char* kFootprintFill = "#4477AA";

// Fixed two-decimal pixel coordinates keep the SVG byte-stable.
std::string px(double value) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::fixed, 2);
    (void)ec;
    return std::string(buf.data(), end);
}

std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string json_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default: out += c;
        }
    }
    return out;
}

void append_pose_fields(std::string& out, const Pose& pose) {
    out += "\"cx\": " + format_number(pose.cx);
    out += ", \"cy\": " + format_number(pose.cy);
    out += ", \"theta\": " + format_number(pose.theta);
}

}  // namespace

std::string format_number(double value) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::general, 12);
    (void)ec;
    return std::string(buf.data(), end);
}

Scene make_scene(const LaptopSpec& laptop, const TableSpec& table, const Pose& pose) {
    return Scene{table, laptop, pose, footprint(laptop, table, pose), {}};
}

std::string render_svg(const Scene& scene, double scale_px_per_unit) {
    if (!(scale_px_per_unit > 0.0)) {
        throw std::invalid_argument("render_svg: scale must be positive");
    }
    const ConvexPolygon lap = laptop_polygon(scene.laptop, scene.pose);

    double min_x = 0.0, min_y = 0.0, max_x = scene.table.width, max_y = scene.table.height;
    for (const Point2& p : lap.vertices()) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    const double margin = 0.1 * std::max(max_x - min_x, max_y - min_y);
    min_x -= margin;
    min_y -= margin;
    max_x += margin;
    max_y += margin;

    const double s = scale_px_per_unit;
    const auto X = [&](double x) { return (x - min_x) * s; };
    const auto Y = [&](double y) { return (max_y - y) * s; };  // SVG y axis points down
    const auto points_attr = [&](const ConvexPolygon& poly) {
        std::string pts;
        for (const Point2& p : poly.vertices()) {
            if (!pts.empty()) pts += ' ';
            pts += px(X(p.x)) + ',' + px(Y(p.y));
        }
        return pts;
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 "
        << px((max_x - min_x) * s) << ' ' << px((max_y - min_y) * s) << "\">\n";
    svg << "  <rect x=\"" << px(X(0.0)) << "\" y=\"" << px(Y(scene.table.height)) << "\" width=\""
        << px(scene.table.width * s) << "\" height=\"" << px(scene.table.height * s)
        << "\" fill=\"" << kTableFill << "\"/>\n";
    if (!scene.footprint.polygon.empty()) {
        svg << "  <polygon points=\"" << points_attr(scene.footprint.polygon) << "\" fill=\""
            << kFootprintFill << "\" fill-opacity=\"0.7\"/>\n";
    }
    svg << "  <polygon points=\"" << points_attr(lap) << "\" fill=\"none\" stroke=\""
        << kLaptopStroke << "\" stroke-width=\"2\"/>\n";
    svg << "  <circle cx=\"" << px(X(scene.pose.cx)) << "\" cy=\"" << px(Y(scene.pose.cy))
        << "\" r=\"4\" fill=\"" << kLaptopStroke << "\"/>\n";

    char label[64];
    std::snprintf(label, sizeof(label), "area = %.4f", scene.footprint.area);
    svg << "  <text x=\"" << px(X(min_x + margin)) << "\" y=\"" << px((max_y - min_y) * s - 6.0)
        << "\" font-family=\"sans-serif\" font-size=\"16\">" << label << "</text>\n";
    for (const auto& [text, anchor] : scene.annotations) {
        svg << "  <text x=\"" << px(X(anchor.x)) << "\" y=\"" << px(Y(anchor.y))
            << "\" font-family=\"sans-serif\" font-size=\"14\">" << xml_escape(text)
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string emit_json(const OptResult& result) {
    std::string out = "{\n  \"min_area\": " + format_number(result.min_area);
    out += ",\n  \"argmin\": [";
    for (std::size_t i = 0; i < result.argmin.size(); ++i) {
        out += i == 0 ? "\n" : ",\n";
        out += "    {";
        append_pose_fields(out, result.argmin[i].pose);
        out += ", \"area\": " + format_number(result.argmin[i].area) + "}";
    }
    out += result.argmin.empty() ? "]" : "\n  ]";
    out += ",\n  \"tie_family\": ";
    out += result.is_tie_family ? "true" : "false";
    out += ",\n  \"evaluations\": " + std::to_string(result.evaluations);
    out += "\n}\n";
    return out;
}

std::string emit_json(const VerificationReport& report) {
    std::string out = "{\n  \"name\": \"" + json_escape(report.name) + "\"";
    out += ",\n  \"passed\": ";
    out += report.passed ? "true" : "false";
    out += ",\n  \"max_deviation\": " + format_number(report.max_deviation);
    out += ",\n  \"samples\": " + std::to_string(report.samples);
    out += ",\n  \"details\": [";
    for (std::size_t i = 0; i < report.details.size(); ++i) {
        const DetailRow& row = report.details[i];
        out += i == 0 ? "\n" : ",\n";
        out += "    {\"input\": " + format_number(row.input);
        out += ", \"measured\": " + format_number(row.measured);
        out += ", \"expected\": " + format_number(row.expected) + "}";
    }
    out += report.details.empty() ? "]" : "\n  ]";
    out += "\n}\n";
    return out;
}

std::string emit_json(const std::vector<SweepRow>& rows) {
    if (rows.empty()) return "[]";
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const SweepRow& row = rows[i];
        out += i == 0 ? "\n" : ",\n";
        out += "  {\"table_w\": " + format_number(row.table_w);
        out += ", \"table_h\": " + format_number(row.table_h);
        out += ", \"min_area\": " + format_number(row.min_area);
        out += ", ";
        append_pose_fields(out, row.argmin_pose);
        out += ", \"regime\": \"" + std::string(regime_name(row.regime)) + "\"";
        out += ", \"shape\": \"" + std::string(shape_class_name(row.footprint_shape)) + "\"}";
    }
    out += "\n]\n";
    return out;
}

std::string emit_csv(const std::vector<SweepRow>& rows) {
    const auto field = [](const std::string& value) {
        if (value.find_first_of(",\"\n") == std::string::npos) return value;
        std::string quoted = "\"";
        for (char c : value) {
            quoted += c;
            if (c == '"') quoted += '"';
        }
        quoted += '"';
        return quoted;
    };
    std::string out = "table_w,table_h,min_area,cx,cy,theta,regime,shape\n";
    for (const SweepRow& row : rows) {
        out += format_number(row.table_w) + ',' + format_number(row.table_h) + ',';
        out += format_number(row.min_area) + ',';
        out += format_number(row.argmin_pose.cx) + ',' + format_number(row.argmin_pose.cy) + ',';
        out += format_number(row.argmin_pose.theta) + ',';
        out += field(regime_name(row.regime)) + ',' + field(shape_class_name(row.footprint_shape));
        out += '\n';
    }
    return out;
}

}  // namespace laptopfit
