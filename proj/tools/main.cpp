// Command-line surface of the toolkit: figure rendering, the verification
// battery, and tables of the envelope constants.
//
// Exit codes: 0 success / all checks pass, 1 check failure,
//             2 usage or domain error, 3 I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypdisk/hypdisk.hpp"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int run_render(const hypdisk::RenderConfig& cfg) {
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file: " << cfg.output_path << "\n";
        return kExitIo;
    }
    hypdisk::render_figure(cfg, out);
    out.flush();
    if (!out) {
        std::cerr << "error: write failed: " << cfg.output_path << "\n";
        return kExitIo;
    }
    return 0;
}

int run_check(const std::vector<double>& r_list, std::uint64_t seed,
              const std::string& format) {
    for (double r : r_list) {
        if (!(r > 0.0 && r < 1.0)) {
            std::cerr << "error: r must lie in (0,1), got " << r << "\n";
            return kExitUsage;
        }
    }
    std::vector<hypdisk::CheckReport> reports;
    for (double r : r_list) {
        auto batch = hypdisk::run_check_battery(r, seed);
        reports.insert(reports.end(), batch.begin(), batch.end());
    }
    if (format == "csv")
        hypdisk::write_reports_csv(reports, std::cout);
    else
        hypdisk::write_reports_json(reports, std::cout);
    for (const auto& rep : reports)
        if (!rep.pass) return kExitCheckFailed;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudohyperbolic disk geometry toolkit"};
    app.require_subcommand(1);

    hypdisk::RenderConfig cfg;
    bool no_envelope = false;
    auto* render = app.add_subcommand(
        "render", "render the disk family and its envelope as SVG");
    render->add_option("--r", cfg.r, "family radius in (0,1)")->required();
    render->add_option("--disks", cfg.n_disks, "number of family disks");
    render->add_flag("--no-envelope", no_envelope, "omit the envelope arcs");
    render->add_flag("--cone", cfg.show_cone, "draw the cone through z = 1");
    render->add_option("--width", cfg.width_px, "image width in pixels");
    render->add_option("-o,--output", cfg.output_path, "output SVG path")
        ->required();

    std::vector<double> r_list;
    std::uint64_t seed = 42;
    std::string format = "json";
    auto* check = app.add_subcommand(
        "check", "run the verification battery and report every check");
    check->add_option("--r", r_list, "family radii, comma separated")
        ->required()
        ->delimiter(',');
    check->add_option("--seed", seed, "sampler seed");
    check->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));

    double r_min = 0.0, r_max = 0.0;
    int steps = 1;
    auto* table = app.add_subcommand(
        "table", "tabulate envelope constants against the radius");
    table->add_option("--r-min", r_min, "smallest radius")->required();
    table->add_option("--r-max", r_max, "largest radius")->required();
    table->add_option("--steps", steps, "number of rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (render->parsed()) {
            cfg.show_envelope = !no_envelope;
            return run_render(cfg);
        }
        if (check->parsed()) return run_check(r_list, seed, format);
        if (table->parsed()) {
            hypdisk::write_table(r_min, r_max, steps, std::cout);
            return 0;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
