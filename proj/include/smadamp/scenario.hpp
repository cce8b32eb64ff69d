#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "smadamp/integrator.hpp"
#include "smadamp/material.hpp"
#include "smadamp/rod_model.hpp"

namespace smadamp {

struct ScenarioConfig {
    std::string name = "custom";
    MaterialParams material;
    BlockParams block;
    double rod_length = 1.0;  ///< cm
    int n_intervals = 40;
    double strain0 = 0.115;
    double theta0 = 210.0;    ///< K
    double t_end = 4.0;       ///< ms
    SolverConfig solver;
    int output_every = 10;    ///< time steps between time-series samples
    int snapshots_every = 0;  ///< samples between field snapshots, 0 = none
    std::filesystem::path output_path = "out";

    /// Throws ConfigError naming the offending key.
    void validate() const;

    bool operator==(const ScenarioConfig&) const = default;
};

/// Names accepted by preset(): exp1, exp2, exp3-novisc, exp3-visc.
const std::vector<std::string>& preset_names();

/// One-line description of a preset for `presets` listings.
std::string preset_description(std::string_view name);

ScenarioConfig preset(std::string_view name);

/// Parses the flat `section.key = value` format. A `preset = <name>` line
/// selects the base configuration; every other line overrides one field.
/// Errors carry the line number and key.
ScenarioConfig parse_config(std::string_view text);

/// Preset name, or a path to a configuration file.
ScenarioConfig load_config(std::string_view path_or_preset);

/// Writes every field; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ScenarioConfig& cfg);

std::string_view to_string(JacobianMode mode);

}  // namespace smadamp
