// spectra.cpp — Batch front end: sweep frequency/coupling grids, locate polariton
// branches, run the built-in validation suites.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cavlr/pole_finding.hpp"
#include "cavlr/sweep.hpp"
#include "cavlr/table.hpp"
#include "cavlr/validate.hpp"

namespace {

int run_sweep_cmd(const std::string& config_path, const std::string& output_override,
                  const std::string& format_override, int threads) {
    cavlr::RunConfig config = cavlr::parse_config_file(config_path);
    if (!output_override.empty()) config.output = output_override;
    if (!format_override.empty()) {
        if (format_override == "csv") config.format = cavlr::ExportFormat::csv;
        else if (format_override == "structured") config.format = cavlr::ExportFormat::structured;
        else throw cavlr::ConfigError("unknown format '" + format_override + "'");
    }
    const cavlr::SpectrumTable table = cavlr::run_sweep(config, threads);
    if (config.output.empty())
        cavlr::export_table(table, std::cout, config.format);
    else
        cavlr::export_table_file(table, config.output, config.format);
    if (!table.failed_points.empty())
        std::cerr << "warning: " << table.failed_points.size()
                  << " axis point(s) failed and were exported as sentinel rows\n";
    return 0;
}

int run_poles_cmd(const std::string& config_path) {
    const cavlr::RunConfig config = cavlr::parse_config_file(config_path);
    std::vector<double> axis;
    if (config.axis == cavlr::SweepAxis::none) {
        axis.push_back(config.is_qhe ? config.qhe.cyclotron_freq : config.spin.channel.lambda);
    } else {
        for (int i = 0; i < config.axis_points; ++i)
            axis.push_back(config.axis_min
                           + (config.axis_max - config.axis_min) * i / (config.axis_points - 1));
    }
    std::printf("axis,pole\n");
    for (double a : axis) {
        std::vector<double> poles;
        if (config.is_qhe) {
            cavlr::QheSpec q = config.qhe;
            switch (config.axis) {
            case cavlr::SweepAxis::plasma_freq: q.plasma_freq = a; break;
            case cavlr::SweepAxis::cyclotron_freq: q.cyclotron_freq = a; break;
            case cavlr::SweepAxis::cavity_freq: q.cavity_freq = a; break;
            default: break;
            }
            poles = cavlr::find_poles(cavlr::qhe_pole_condition(q), config.omega_min,
                                      config.omega_max);
        } else {
            cavlr::ModelSpec s = config.spin;
            if (config.axis == cavlr::SweepAxis::coupling)
                s.channel = cavlr::InteractionChannel(a, s.channel.cavity_freq, s.channel.zeta,
                                                      s.channel.static_shift);
            poles = cavlr::find_poles(cavlr::spin_pole_condition(s), config.omega_min,
                                      config.omega_max);
        }
        for (double p : poles)
            std::printf("%s,%s\n", cavlr::format_double(a).c_str(),
                        cavlr::format_double(p).c_str());
    }
    return 0;
}

int run_validate_cmd() {
    const auto results = cavlr::run_validation();
    bool all_ok = true;
    std::printf("%-36s %-6s %-13s %s\n", "check", "status", "worst", "budget");
    for (const auto& r : results) {
        std::printf("%-36s %-6s %-13.3e %.0e\n", r.name.c_str(), r.pass ? "ok" : "FAIL", r.worst,
                    r.budget);
        all_ok = all_ok && r.pass;
    }
    return all_ok ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cavity linear-response spectra"};
    app.require_subcommand(1);

    std::string config_path, output_override, format_override;
    int threads = 1;

    CLI::App* sweep = app.add_subcommand("sweep", "evaluate a (axis, omega) grid and export it");
    sweep->add_option("config", config_path, "run configuration file")->required();
    sweep->add_option("--output", output_override, "output path (default: from config or stdout)");
    sweep->add_option("--format", format_override, "csv | structured");
    sweep->add_option("--threads", threads, "concurrent axis-point workers")
        ->check(CLI::PositiveNumber);

    CLI::App* poles = app.add_subcommand("poles", "locate delta=0 polariton branches");
    poles->add_option("config", config_path, "run configuration file")->required();

    app.add_subcommand("validate", "run the built-in oracle suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) return run_sweep_cmd(config_path, output_override, format_override, threads);
        if (poles->parsed()) return run_poles_cmd(config_path);
        return run_validate_cmd();
    } catch (const cavlr::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return app.get_subcommand("poles")->parsed() || app.get_subcommand("validate")->parsed()
                   ? 2
                   : 1;
    }
}
