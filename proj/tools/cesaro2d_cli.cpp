// Command-line front end: scenario runners -> CSV reports (+ optional SVG).
// Exit codes: 0 all verdicts pass, 1 a verdict failed, 2 usage/config error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "cesaro2d/experiments.hpp"
#include "cesaro2d/svg.hpp"

namespace {

using cesaro2d::ExperimentConfig;
using cesaro2d::ExperimentReport;

void add_common_options(CLI::App* cmd, ExperimentConfig& cfg, std::string& point_arg,
                        std::string& x_grid_arg, std::string& y_grid_arg,
                        std::string& n_list_arg, std::string& N_list_arg,
                        std::size_t& grid_uniform) {
    cmd->add_option("--alpha", cfg.alpha, "Summability order alpha (mean order -alpha)");
    cmd->add_option("--beta", cfg.beta, "Summability order beta");
    cmd->add_option("--lambda", cfg.lambda_spec,
                    "Weight sequence: harmonic | constant:<c> | power-log:eps=<e>");
    cmd->add_option("--function", cfg.function_name,
                    "Test function: one | quadrant-jump | cos-cos | sin-x | sin-3x | "
                    "sawtooth-sum | staircase:K=<k> | fN:N=<odd> | random-trig:deg=<d>,seed=<s>");
    cmd->add_option("--point", point_arg, "Evaluation point \"x,y\"");
    cmd->add_option("--n-list", n_list_arg, "Comma-separated mean orders n");
    cmd->add_option("--N-list", N_list_arg, "Comma-separated construction sizes N (odd)");
    cmd->add_option("--x-grid", x_grid_arg, "Comma-separated x grid for variation");
    cmd->add_option("--y-grid", y_grid_arg, "Comma-separated y grid for variation");
    cmd->add_option("--grid-uniform", grid_uniform,
                    "Uniform k-point grid on [0,2pi) for both axes");
    cmd->add_option("--horizon", cfg.horizon, "Condition-check horizon");
    cmd->add_option("--j0", cfg.j0, "Lower-bound truncation index (0 = heuristic)");
    cmd->add_option("--resolution", cfg.resolution, "Coefficient lattice resolution (0 = auto)");
    cmd->add_option("--quad-nodes", cfg.quad_nodes, "Gauss-Legendre nodes per panel");
    cmd->add_option("--mode", cfg.mode, "Variation mode: auto | exact | heuristic");
    cmd->add_option("--out", cfg.out_path, "CSV output path (default: stdout)");
    cmd->add_option("--svg", cfg.svg_path, "SVG line-plot output path");
    cmd->add_option("--dump", cfg.dump_path, "Per-u kernel curve CSV (kernel scenario)");
}

void finalize_config(ExperimentConfig& cfg, const std::string& point_arg,
                     const std::string& x_grid_arg, const std::string& y_grid_arg,
                     const std::string& n_list_arg, const std::string& N_list_arg,
                     std::size_t grid_uniform) {
    if (!point_arg.empty()) {
        const auto comma = point_arg.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("--point expects \"x,y\"");
        cfg.point_x = std::stod(point_arg.substr(0, comma));
        cfg.point_y = std::stod(point_arg.substr(comma + 1));
    }
    if (!n_list_arg.empty()) cfg.n_list = ExperimentConfig::parse_sizes(n_list_arg);
    if (!N_list_arg.empty()) cfg.N_list = ExperimentConfig::parse_sizes(N_list_arg);
    if (!x_grid_arg.empty()) cfg.x_grid = ExperimentConfig::parse_doubles(x_grid_arg);
    if (!y_grid_arg.empty()) cfg.y_grid = ExperimentConfig::parse_doubles(y_grid_arg);
    if (grid_uniform > 0) {
        cfg.x_grid.clear();
        cfg.y_grid.clear();
        for (std::size_t k = 0; k < grid_uniform; ++k) {
            const double v = cesaro2d::two_pi * static_cast<double>(k) /
                             static_cast<double>(grid_uniform);
            cfg.x_grid.push_back(v);
            cfg.y_grid.push_back(v);
        }
    }
}

void write_svg(const ExperimentConfig& cfg, const ExperimentReport& rep) {
    if (cfg.svg_path.empty()) return;
    std::vector<cesaro2d::SvgSeries> series;
    auto col = [&](const std::string& name) { return rep.column(name); };
    auto make = [&](const std::string& xc, const std::string& yc) {
        cesaro2d::SvgSeries s;
        s.name = yc;
        for (const auto& r : rep.rows) s.points.emplace_back(r[col(xc)], r[col(yc)]);
        return s;
    };
    bool log_x = true, log_y = true;
    if (cfg.scenario == "converge") {
        series.push_back(make("n", "abs_error"));
    } else if (cfg.scenario == "diverge") {
        series.push_back(make("N", "sigma_abs"));
        series.push_back(make("N", "lower_bound"));
        series.push_back(make("N", "eq39_sum"));
        log_y = false;
    } else if (cfg.scenario == "kernel-diagnostics") {
        series.push_back(make("n", "max_abs_K"));
        series.push_back(make("n", "two_n"));
    } else if (cfg.scenario == "check-conditions") {
        series.push_back(make("k", "partial_sum"));
        log_y = false;
    } else {
        std::cerr << "note: --svg has no plot for scenario " << cfg.scenario << "\n";
        return;
    }
    std::ofstream out(cfg.svg_path);
    if (!out) throw std::invalid_argument("cannot open svg path " + cfg.svg_path);
    cesaro2d::write_line_plot(out, cfg.scenario, series, log_x, log_y);
}

int run(const ExperimentConfig& cfg) {
    const ExperimentReport rep = cesaro2d::run_scenario(cfg);
    if (cfg.out_path.empty()) {
        rep.write_csv(std::cout);
    } else {
        std::ofstream out(cfg.out_path);
        if (!out) throw std::invalid_argument("cannot open output path " + cfg.out_path);
        rep.write_csv(out);
    }
    if (!cfg.dump_path.empty() && cfg.scenario == "kernel-diagnostics") {
        std::ofstream out(cfg.dump_path);
        if (!out) throw std::invalid_argument("cannot open dump path " + cfg.dump_path);
        cesaro2d::kernel_point_dump(cfg.n_list.back(), cfg.alpha).write_csv(out);
    }
    write_svg(cfg, rep);
    for (const auto& [name, ok] : rep.verdicts)
        std::cerr << (ok ? "[pass] " : "[FAIL] ") << name << "\n";
    std::cerr << "wall time: " << rep.wall_seconds << " s\n";
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Negative-order Cesaro summability laboratory for double Fourier series"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    std::string point_arg, x_grid_arg, y_grid_arg, n_list_arg, N_list_arg;
    std::size_t grid_uniform = 0;
    static const char* scenarios[] = {"converge", "diverge", "kernel-diagnostics", "variation",
                                      "check-conditions"};
    for (const char* name : scenarios) {
        CLI::App* cmd = app.add_subcommand(name);
        add_common_options(cmd, cfg, point_arg, x_grid_arg, y_grid_arg, n_list_arg, N_list_arg,
                           grid_uniform);
        cmd->callback([&cfg, name] { cfg.scenario = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        finalize_config(cfg, point_arg, x_grid_arg, y_grid_arg, n_list_arg, N_list_arg,
                        grid_uniform);
        return run(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
