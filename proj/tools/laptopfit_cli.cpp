// laptopfit command-line front end; talks to the shared library through the
// public C API only.

#include <laptopfit/laptopfit.h>

#include <CLI11.hpp>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitBadArguments = 2;

struct ProblemDeleter {
    void operator()(lf_problem* p) const { lf_problem_destroy(p); }
};
using ProblemPtr = std::unique_ptr<lf_problem, ProblemDeleter>;

struct OwnedString {
    char* data = nullptr;
    ~OwnedString() { lf_string_free(data); }
    std::string str() const { return data == nullptr ? std::string() : std::string(data); }
};

std::string fmt12(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
    (void)ec;
    return std::string(buf, end);
}

struct Options {
    double laptop_length = 1.5;
    double table_w = 1.0;
    double table_h = 1.0;
    std::uint64_t seed = 0;
    int grid_xy = 0;
    int grid_theta = 0;
    int top_k = 0;
    double tie_tolerance = -1.0;
    double refine_min_step = -1.0;
    int refine_max_iters = 0;
    double refine_step_xy = -1.0;
    double refine_step_theta = -1.0;
    bool no_symmetry = false;
    long long samples = 0;
    long long probe_samples = 0;
    std::string kind = "bounds";
    std::string json_path;
    std::string csv_path;
    std::string svg_path;
    std::string sizes;
    double cx = 0.0;
    double cy = 0.0;
    double theta = 0.0;
    bool have_pose = false;
    double scale = 200.0;
};

bool check(lf_status status, const char* what) {
    if (status == LF_OK) return true;
    std::cerr << "error: " << what << ": " << lf_status_message(status) << "\n";
    return false;
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    out.close();
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return false;
    }
    return true;
}

ProblemPtr make_problem(const Options& opt, lf_status* status) {
    lf_problem* raw = nullptr;
    *status = lf_problem_create(opt.laptop_length, opt.table_w, opt.table_h, &raw);
    ProblemPtr problem(raw);
    if (*status != LF_OK) return problem;
    lf_problem_set_seed(problem.get(), opt.seed);
    if (opt.grid_xy > 0 || opt.grid_theta > 0) {
        *status = lf_problem_set_grid(problem.get(), opt.grid_xy > 0 ? opt.grid_xy : 64,
                                      opt.grid_theta > 0 ? opt.grid_theta : 96);
        if (*status != LF_OK) return problem;
    }
    if (opt.top_k > 0) lf_problem_set_top_k(problem.get(), opt.top_k);
    if (opt.tie_tolerance >= 0.0) lf_problem_set_tie_tolerance(problem.get(), opt.tie_tolerance);
    if (opt.refine_min_step > 0.0 || opt.refine_max_iters > 0) {
        lf_problem_set_refinement(problem.get(),
                                  opt.refine_min_step > 0.0 ? opt.refine_min_step : 1e-10,
                                  opt.refine_max_iters > 0 ? opt.refine_max_iters : 200);
    }
    if (opt.refine_step_xy > 0.0 || opt.refine_step_theta > 0.0) {
        lf_problem_set_refine_steps(problem.get(),
                                    opt.refine_step_xy > 0.0 ? opt.refine_step_xy : 0.0,
                                    opt.refine_step_theta > 0.0 ? opt.refine_step_theta : 0.0);
    }
    if (opt.no_symmetry) lf_problem_set_symmetry_reduction(problem.get(), 0);
    return problem;
}

bool parse_sizes(const std::string& text, std::vector<double>& out) {
    out.clear();
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string token = text.substr(pos, comma - pos);
        const std::size_t x = token.find('x');
        if (x == std::string::npos) return false;
        try {
            out.push_back(std::stod(token.substr(0, x)));
            out.push_back(std::stod(token.substr(x + 1)));
        } catch (const std::exception&) {
            return false;
        }
        pos = comma + 1;
    }
    return !out.empty();
}

int run_solve(const Options& opt) {
    lf_status status = LF_OK;
    ProblemPtr problem = make_problem(opt, &status);
    if (!check(status, "solve")) return kExitBadArguments;

    lf_solution* raw = nullptr;
    if (!check(lf_solve(problem.get(), &raw), "solve")) return kExitBadArguments;
    std::unique_ptr<lf_solution, decltype(&lf_solution_destroy)> solution(raw,
                                                                          lf_solution_destroy);

    double cx = 0.0, cy = 0.0, theta = 0.0;
    lf_solution_argmin_pose(solution.get(), 0, &cx, &cy, &theta, nullptr);
    std::cout << "min_area=" << fmt12(lf_solution_min_area(solution.get())) << " pose=("
              << fmt12(cx) << "," << fmt12(cy) << "," << fmt12(theta) << ")\n";

    if (!opt.json_path.empty()) {
        OwnedString json;
        if (!check(lf_solution_json(solution.get(), &json.data), "solve json")) {
            return kExitBadArguments;
        }
        if (!write_file(opt.json_path, json.str())) return kExitBadArguments;
    }
    if (!opt.svg_path.empty()) {
        OwnedString svg;
        if (!check(lf_render_svg(problem.get(), cx, cy, theta, opt.scale, &svg.data),
                   "solve svg")) {
            return kExitBadArguments;
        }
        if (!write_file(opt.svg_path, svg.str())) return kExitBadArguments;
    }
    return kExitOk;
}

int run_verify(const Options& opt) {
    lf_status status = LF_OK;
    ProblemPtr problem = make_problem(opt, &status);
    if (!check(status, "verify")) return kExitBadArguments;

    lf_verify_kind kind = LF_VERIFY_BOUNDS;
    if (opt.kind == "constancy") {
        kind = LF_VERIFY_CONSTANCY;
    } else if (opt.kind == "corner-sweep") {
        kind = LF_VERIFY_CORNER_SWEEP;
    } else if (opt.kind == "bounds") {
        kind = LF_VERIFY_BOUNDS;
    } else if (opt.kind == "scenario2") {
        kind = LF_VERIFY_SCENARIO2;
    } else {
        std::cerr << "error: unknown --kind '" << opt.kind << "'\n";
        return kExitBadArguments;
    }

    lf_report* raw = nullptr;
    if (!check(lf_verify(problem.get(), kind, opt.samples, opt.seed, &raw), "verify")) {
        return kExitBadArguments;
    }
    std::unique_ptr<lf_report, decltype(&lf_report_destroy)> report(raw, lf_report_destroy);

    const bool passed = lf_report_passed(report.get()) != 0;
    std::cout << "name=" << lf_report_name(report.get())
              << " passed=" << (passed ? "true" : "false")
              << " max_deviation=" << fmt12(lf_report_max_deviation(report.get()))
              << " samples=" << lf_report_samples(report.get()) << "\n";

    if (kind == LF_VERIFY_SCENARIO2) {
        lf_scenario2_result s2{};
        if (check(lf_scenario2_analyze(problem.get(), &s2), "scenario2")) {
            std::cout << "legs=(" << fmt12(s2.leg1) << "," << fmt12(s2.leg2)
                      << ") leg_diff=" << fmt12(s2.leg_diff)
                      << " isosceles=" << (s2.is_isosceles != 0 ? "true" : "false")
                      << " corner=(" << fmt12(s2.corner_cx) << "," << fmt12(s2.corner_cy)
                      << ") theta=" << fmt12(s2.theta) << "\n";
        }
    }

    if (!opt.json_path.empty()) {
        OwnedString json;
        if (!check(lf_report_json(report.get(), &json.data), "verify json")) {
            return kExitBadArguments;
        }
        if (!write_file(opt.json_path, json.str())) return kExitBadArguments;
    }
    return passed ? kExitOk : kExitVerificationFailed;
}

int run_classify(const Options& opt) {
    lf_status status = LF_OK;
    ProblemPtr problem = make_problem(opt, &status);
    if (!check(status, "classify")) return kExitBadArguments;

    lf_regime regime = LF_REGIME_COMPLEX;
    if (!check(lf_classify(problem.get(), opt.probe_samples, opt.seed, &regime), "classify")) {
        return kExitBadArguments;
    }
    std::cout << lf_regime_name(regime) << "\n";
    return kExitOk;
}

int run_sweep(const Options& opt) {
    lf_status status = LF_OK;
    ProblemPtr problem = make_problem(opt, &status);
    if (!check(status, "sweep")) return kExitBadArguments;

    std::vector<double> sizes;
    if (!parse_sizes(opt.sizes, sizes)) {
        std::cerr << "error: --sizes expects WxH[,WxH...] e.g. 0.3x0.4,2x2\n";
        return kExitBadArguments;
    }
    lf_sweep* raw = nullptr;
    if (!check(lf_sweep_run(problem.get(), sizes.data(), static_cast<int>(sizes.size() / 2), &raw),
               "sweep")) {
        return kExitBadArguments;
    }
    std::unique_ptr<lf_sweep, decltype(&lf_sweep_destroy)> sweep(raw, lf_sweep_destroy);
    std::cout << "rows=" << lf_sweep_row_count(sweep.get()) << "\n";

    if (!opt.csv_path.empty()) {
        OwnedString csv;
        if (!check(lf_sweep_csv(sweep.get(), &csv.data), "sweep csv")) return kExitBadArguments;
        if (!write_file(opt.csv_path, csv.str())) return kExitBadArguments;
    }
    if (!opt.json_path.empty()) {
        OwnedString json;
        if (!check(lf_sweep_json(sweep.get(), &json.data), "sweep json")) {
            return kExitBadArguments;
        }
        if (!write_file(opt.json_path, json.str())) return kExitBadArguments;
    }
    return kExitOk;
}

int run_render(const Options& opt) {
    lf_status status = LF_OK;
    ProblemPtr problem = make_problem(opt, &status);
    if (!check(status, "render")) return kExitBadArguments;

    double cx = opt.cx, cy = opt.cy, theta = opt.theta;
    if (!opt.have_pose) {
        lf_solution* raw = nullptr;
        if (!check(lf_solve(problem.get(), &raw), "render")) return kExitBadArguments;
        std::unique_ptr<lf_solution, decltype(&lf_solution_destroy)> solution(
            raw, lf_solution_destroy);
        lf_solution_argmin_pose(solution.get(), 0, &cx, &cy, &theta, nullptr);
    }

    OwnedString svg;
    if (!check(lf_render_svg(problem.get(), cx, cy, theta, opt.scale, &svg.data), "render")) {
        return kExitBadArguments;
    }
    if (!write_file(opt.svg_path, svg.str())) return kExitBadArguments;
    std::cout << "svg=" << opt.svg_path << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "laptopfit: minimal-footprint placement of a rectangular laptop on a rectangular "
        "table (all lengths in laptop-width units)"};
    app.require_subcommand(1);

    Options opt;

    const auto add_common = [&](CLI::App* cmd, bool with_table) {
        cmd->add_option("--laptop-length", opt.laptop_length,
                        "Laptop long side, >= 1 (the short side is the unit)")
            ->required();
        if (with_table) {
            cmd->add_option("--table-w", opt.table_w, "Table width")->required();
            cmd->add_option("--table-h", opt.table_h, "Table height")->required();
        }
        cmd->add_option("--seed", opt.seed, "Random seed (default 0)");
        cmd->add_option("--grid-xy", opt.grid_xy, "Grid intervals per table axis (default 64)");
        cmd->add_option("--grid-theta", opt.grid_theta,
                        "Orientation samples over [0, pi) (default 96)");
        cmd->add_option("--top-k", opt.top_k, "Seeds refined after the grid pass (default 16)");
        cmd->add_option("--tie-tolerance", opt.tie_tolerance,
                        "Area tolerance for tie detection (default 1e-6)");
        cmd->add_option("--refine-min-step", opt.refine_min_step,
                        "Pattern-search stop step (default 1e-10)");
        cmd->add_option("--refine-max-iters", opt.refine_max_iters,
                        "Pattern-search iteration cap (default 200)");
        cmd->add_option("--refine-step-xy", opt.refine_step_xy,
                        "Initial pattern-search step for the midpoint (default min(W,H)/grid)");
        cmd->add_option("--refine-step-theta", opt.refine_step_theta,
                        "Initial pattern-search step for the angle (default pi/grid-theta)");
        cmd->add_flag("--no-symmetry", opt.no_symmetry, "Disable table symmetry reduction");
    };

    CLI::App* solve = app.add_subcommand("solve", "Find the minimal-footprint stable placement");
    add_common(solve, true);
    solve->add_option("--json", opt.json_path, "Write the solution as JSON");
    solve->add_option("--svg", opt.svg_path, "Render the optimal placement as SVG");
    solve->add_option("--scale", opt.scale, "SVG pixels per laptop-width unit (default 200)");

    CLI::App* verify = app.add_subcommand("verify", "Run a verification check");
    add_common(verify, true);
    verify
        ->add_option("--kind", opt.kind,
                     "One of: constancy, corner-sweep, bounds, scenario2")
        ->required();
    verify->add_option("--samples", opt.samples,
                       "Theta samples (constancy/corner-sweep) or random poses (bounds)");
    verify->add_option("--json", opt.json_path, "Write the report as JSON");

    CLI::App* classify = app.add_subcommand("classify", "Print the table-size regime");
    add_common(classify, true);
    classify->add_option("--probe-samples", opt.probe_samples,
                         "Random poses probed at the regime boundary (default 20000)");

    CLI::App* sweep = app.add_subcommand("sweep", "Solve a list of table sizes");
    add_common(sweep, false);
    sweep->add_option("--sizes", opt.sizes, "Comma-separated WxH list, e.g. 0.3x0.4,2x2")
        ->required();
    sweep->add_option("--csv", opt.csv_path, "Write sweep rows as CSV");
    sweep->add_option("--json", opt.json_path, "Write sweep rows as JSON");

    CLI::App* render = app.add_subcommand("render", "Render one placement as SVG");
    add_common(render, true);
    CLI::Option* opt_cx = render->add_option("--cx", opt.cx,
                                             "Midpoint x (omit the pose flags to render the "
                                             "solved optimum)");
    CLI::Option* opt_cy = render->add_option("--cy", opt.cy, "Midpoint y");
    CLI::Option* opt_theta =
        render->add_option("--theta", opt.theta, "Long-axis angle in [0, pi)");
    render->add_option("--svg", opt.svg_path, "Output SVG path")->required();
    render->add_option("--scale", opt.scale, "SVG pixels per laptop-width unit (default 200)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // --help goes to stdout, exit 0
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitBadArguments;
    }

    opt.have_pose = opt_cx->count() > 0 && opt_cy->count() > 0 && opt_theta->count() > 0;

    if (solve->parsed()) return run_solve(opt);
    if (verify->parsed()) return run_verify(opt);
    if (classify->parsed()) return run_classify(opt);
    if (sweep->parsed()) return run_sweep(opt);
    if (render->parsed()) return run_render(opt);
    std::cerr << app.help();
    return kExitBadArguments;
}
