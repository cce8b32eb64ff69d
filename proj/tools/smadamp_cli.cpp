// Command-line front end: run a damping scenario, list presets, or tabulate
// the stationary strains of the Landau free energy over a temperature range.

#include <cmath>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "smadamp/errors.hpp"
#include "smadamp/material.hpp"
#include "smadamp/output.hpp"
#include "smadamp/scenario.hpp"

namespace {

std::string kind_name(smadamp::StationaryKind k) {
    switch (k) {
        case smadamp::StationaryKind::minimum: return "minimum";
        case smadamp::StationaryKind::maximum: return "maximum";
        case smadamp::StationaryKind::inflection: return "inflection";
    }
    return "unknown";
}

}  // namespace

int main(int argc, char** argv) {
    using namespace smadamp;

    CLI::App app{"Vibration damping of a mass block by a shape-memory-alloy rod"};
    app.require_subcommand(1);

    auto* run_cmd = app.add_subcommand("run", "Simulate a scenario and write CSV/JSON output");
    std::string preset_name;
    std::string config_path;
    std::string out_dir;
    std::optional<double> dt;
    std::optional<double> t_end;
    std::optional<int> snapshots_every;
    std::optional<int> output_every;
    auto* preset_opt = run_cmd->add_option("--preset", preset_name, "Preset name (see `presets`)");
    auto* config_opt = run_cmd->add_option("--config", config_path, "Configuration file");
    preset_opt->excludes(config_opt);
    run_cmd->add_option("--out-dir", out_dir, "Output directory (default: from config)");
    run_cmd->add_option("--dt", dt, "Time step in ms");
    run_cmd->add_option("--t-end", t_end, "End time in ms");
    run_cmd->add_option("--output-every", output_every, "Time steps between samples");
    run_cmd->add_option("--snapshots-every", snapshots_every,
                        "Samples between field snapshots (0 disables)");

    auto* show_cmd = app.add_subcommand("show-config", "Print the resolved configuration");
    std::string show_source = "exp1";
    show_cmd->add_option("source", show_source, "Preset name or configuration file");

    auto* presets_cmd = app.add_subcommand("presets", "List the built-in scenarios");

    auto* wells_cmd = app.add_subcommand("wells", "Stationary strains over a temperature sweep (CSV)");
    double t_min = 200.0;
    double t_max = 300.0;
    double t_step = 10.0;
    wells_cmd->add_option("--t-min", t_min, "First temperature, K");
    wells_cmd->add_option("--t-max", t_max, "Last temperature, K");
    wells_cmd->add_option("--t-step", t_step, "Temperature increment, K")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*presets_cmd) {
            for (const auto& name : preset_names()) {
                std::cout << name << "\t" << preset_description(name) << '\n';
            }
            return kExitOk;
        }

        if (*wells_cmd) {
            const MaterialParams p;
            std::cout << "theta_K,strain,kind\n";
            const long n = std::lround(std::floor((t_max - t_min) / t_step + 1e-9));
            for (long k = 0; k <= n; ++k) {
                const double theta = t_min + static_cast<double>(k) * t_step;
                for (const auto& s : stationary_strains(p, theta)) {
                    std::cout << format_number(theta) << ',' << format_number(s.strain) << ','
                              << kind_name(s.kind) << '\n';
                }
            }
            return kExitOk;
        }

        if (*show_cmd) {
            std::cout << serialize_config(load_config(show_source));
            return kExitOk;
        }

        ScenarioConfig cfg;
        if (!preset_name.empty()) {
            cfg = preset(preset_name);
        } else if (!config_path.empty()) {
            cfg = load_config(config_path);
        } else {
            std::cerr << "run: one of --preset or --config is required\n";
            return kExitConfig;
        }
        if (!out_dir.empty()) cfg.output_path = out_dir;
        if (dt) cfg.solver.dt = *dt;
        if (t_end) cfg.t_end = *t_end;
        if (output_every) cfg.output_every = *output_every;
        if (snapshots_every) cfg.snapshots_every = *snapshots_every;
        return run_scenario(cfg, std::cerr);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const DomainError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    }
}
