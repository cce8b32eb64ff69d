#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"

#include "smadamp/grid.hpp"
#include "smadamp/scenario.hpp"
#include "smadamp/trajectory.hpp"

namespace smadamp {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 2,
    kExitSolver = 3,
    kExitIo = 4,
};

/// Header of the time-series CSV. Regression-locked.
inline constexpr const char* kTimeSeriesHeader =
    "time_ms,block_pos_cm,block_vel_cm_per_ms,avg_temp_K,rod_kinetic,block_kinetic,potential,"
    "thermal,total,strain_at_L,coupling";

inline constexpr const char* kSnapshotHeader = "x_cm,u_cm,v_cm_per_ms,strain,theta_K";

/// Shortest round-trip decimal form, independent of the C locale.
std::string format_number(double v);

void write_time_series(std::ostream& out, const Grid& grid, const Trajectory& trajectory);
void write_snapshot(std::ostream& out, const Grid& grid, const RodState& state);

/// Config echo, Newton statistics, final energies and switching counts.
nlohmann::json run_summary(const ScenarioConfig& cfg, const Grid& grid, const Trajectory& trajectory);

struct ScenarioResult {
    Grid grid;
    Trajectory trajectory;
};

/// Builds the model and integrates it. Solver failures propagate.
ScenarioResult simulate(const ScenarioConfig& cfg);

/// Simulates and writes timeseries.csv, summary.json and (when enabled)
/// snapshot_<sample>.csv into cfg.output_path. Returns an ExitCode and
/// reports failures on `log`.
int run_scenario(const ScenarioConfig& cfg, std::ostream& log);

}  // namespace smadamp
