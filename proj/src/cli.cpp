#include "heatplate/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "heatplate/config.hpp"
#include "heatplate/output.hpp"
#include "heatplate/scenario.hpp"

namespace heatplate {

namespace {

struct ConfigSource {
    int scenario = 1;
    std::string config_path;
    std::string grid;
    std::optional<double> dt;
    std::optional<double> t_final;
};

void add_source_options(CLI::App& cmd, ConfigSource& src) {
    auto* scenario = cmd.add_option("--scenario", src.scenario, "Built-in scenario (1 or 2)")
                         ->check(CLI::IsMember({1, 2}));
    auto* config = cmd.add_option("--config", src.config_path, "JSON configuration file");
    scenario->excludes(config);
    cmd.add_option("--grid", src.grid, "Override grid size, e.g. 100x40");
    cmd.add_option("--dt", src.dt, "Override the time step (s)");
    cmd.add_option("--t-final", src.t_final, "Override the final time (s)");
}

SimulationConfig resolve_config(const ConfigSource& src) {
    SimulationConfig cfg =
        src.config_path.empty() ? scenario_preset(src.scenario) : load_config_file(src.config_path);
    if (!src.grid.empty()) {
        unsigned long j = 0;
        unsigned long k = 0;
        char tail = 0;
        if (std::sscanf(src.grid.c_str(), "%lux%lu%c", &j, &k, &tail) != 2)
            throw ConfigError("--grid: expected JxK, got '" + src.grid + "'");
        cfg.J = j;
        cfg.K = k;
    }
    if (src.dt) cfg.time.dt = *src.dt;
    if (src.t_final) cfg.time.t_final = *src.t_final;
    validate(cfg);
    return cfg;
}

std::string snapshot_name(std::size_t index) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "snapshot_%04zu.csv", index);
    return buf;
}

int run_command(const ConfigSource& src, const std::string& out_dir, bool render,
                std::ostream& out, std::ostream& err) {
    const SimulationConfig cfg = resolve_config(src);
    const Grid grid(cfg.geometry, cfg.J, cfg.K);
    const double limit = stability_limit(grid, cfg.material, cfg.initial.base);
    if (cfg.time.dt > limit)
        err << "warning: dt=" << format_number(cfg.time.dt)
            << " exceeds the explicit stability estimate " << format_number(limit) << " s\n";

    const SimulationResult result = run_simulation(cfg);

    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    write_file(dir / "config.json", dump_config(cfg));
    write_file(dir / "final_field.csv", write_field_csv(result.final_field, grid));
    for (std::size_t i = 0; i < result.snapshots.size(); ++i)
        write_file(dir / snapshot_name(i), write_field_csv(result.snapshots[i].field, grid));
    write_file(dir / "signals.csv", write_signals_csv(result.signals));
    if (render) write_file(dir / "heatmap.pgm", render_heatmap(result.final_field, grid));

    if (result.diverged) {
        const auto cell = grid.cell_index(result.diverged->cell);
        err << "error: simulation diverged at step " << result.diverged->step << " (t="
            << format_number(result.final_time) << " s), cell j=" << cell.j << " k=" << cell.k
            << "\n";
        return kExitDiverged;
    }

    const auto stats = topside_statistics(result);
    const auto avg = averaged_signals(result.signals);
    out << "summary: steps=" << step_count(cfg) << " t_final=" << format_number(result.final_time)
        << " y_avg=" << format_number(avg.y_avg.back())
        << " u_avg=" << format_number(avg.u_avg.back())
        << " topside_mean=" << format_number(stats.mean)
        << " peak_to_peak=" << format_number(stats.peak_to_peak)
        << " dominant_mode=" << stats.dominant_mode << "\n";
    return kExitOk;
}

int check_command(const ConfigSource& src, std::ostream& out) {
    const SimulationConfig cfg = resolve_config(src);
    const Grid grid(cfg.geometry, cfg.J, cfg.K);
    const double limit = stability_limit(grid, cfg.material, cfg.initial.base);
    out << "config ok: grid=" << cfg.J << "x" << cfg.K << " steps=" << step_count(cfg) << "\n";
    out << "dt=" << format_number(cfg.time.dt) << " stability_limit=" << format_number(limit)
        << " (theta_ref=" << format_number(cfg.initial.base) << " K) "
        << (cfg.time.dt <= limit ? "within limit" : "EXCEEDS limit") << "\n";
    return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Closed-loop heating plate simulator", "heatplate"};
    app.require_subcommand(1);

    ConfigSource run_src;
    std::string out_dir;
    bool render = false;
    auto* run = app.add_subcommand("run", "Run a simulation and write CSV outputs");
    add_source_options(*run, run_src);
    run->add_option("--out", out_dir, "Output directory")->required();
    run->add_flag("--render", render, "Also write heatmap.pgm of the final field");

    ConfigSource check_src;
    auto* check = app.add_subcommand("check", "Validate a configuration");
    add_source_options(*check, check_src);

    auto* version = app.add_subcommand("version", "Print the version");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (run->parsed()) return run_command(run_src, out_dir, render, out, err);
        if (check->parsed()) return check_command(check_src, out);
        if (version->parsed()) {
            out << "heatplate " << kVersion << "\n";
            return kExitOk;
        }
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace heatplate
