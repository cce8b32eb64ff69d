#include "smadamp/output.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "smadamp/diagnostics.hpp"
#include "smadamp/errors.hpp"

namespace smadamp {

namespace {

nlohmann::json energy_json(const EnergyReport& e) {
    return {{"rod_kinetic", e.rod_kinetic}, {"block_kinetic", e.block_kinetic},
            {"potential", e.potential},     {"thermal", e.thermal},
            {"coupling", e.coupling},       {"total", e.total},
            {"avg_temp_K", e.avg_temperature}};
}

nlohmann::json config_json(const ScenarioConfig& cfg) {
    nlohmann::json out = nlohmann::json::object();
    std::istringstream lines(serialize_config(cfg));
    std::string line;
    while (std::getline(lines, line)) {
        const auto eq = line.find(" = ");
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 3);
        double number = 0.0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), number);
        if (ec == std::errc() && ptr == value.data() + value.size()) {
            out[key] = number;
        } else {
            out[key] = value;
        }
    }
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace

std::string format_number(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

void write_time_series(std::ostream& out, const Grid& grid, const Trajectory& trajectory) {
    const int last = grid.size() - 1;
    const auto d1_last = grid.d1().row(last);
    out << kTimeSeriesHeader << '\n';
    for (const auto& s : trajectory.samples) {
        const auto& e = s.energy;
        const double fields[] = {s.time,
                                 grid.length() + s.state.u(last),
                                 s.state.v(last),
                                 e.avg_temperature,
                                 e.rod_kinetic,
                                 e.block_kinetic,
                                 e.potential,
                                 e.thermal,
                                 e.total,
                                 d1_last.dot(s.state.u),
                                 e.coupling};
        bool first = true;
        for (double f : fields) {
            if (!first) out << ',';
            out << format_number(f);
            first = false;
        }
        out << '\n';
    }
}

void write_snapshot(std::ostream& out, const Grid& grid, const RodState& state) {
    const Eigen::VectorXd eps = strain(grid, state);
    out << kSnapshotHeader << '\n';
    for (int i = 0; i < grid.size(); ++i) {
        out << format_number(grid.nodes()(i)) << ',' << format_number(state.u(i)) << ','
            << format_number(state.v(i)) << ',' << format_number(eps(i)) << ','
            << format_number(state.theta(i)) << '\n';
    }
}

nlohmann::json run_summary(const ScenarioConfig& cfg, const Grid& grid, const Trajectory& trajectory) {
    const auto& its = trajectory.newton_iterations;
    long total = 0;
    int max_its = 0;
    for (int it : its) {
        total += it;
        max_its = std::max(max_its, it);
    }
    const int mid = grid.midpoint_index();
    const int last = grid.size() - 1;

    nlohmann::json j;
    j["scenario"] = cfg.name;
    j["config"] = config_json(cfg);
    j["newton"] = {{"steps", its.size()},
                   {"total_iterations", total},
                   {"max_iterations", max_its},
                   {"mean_iterations", its.empty() ? 0.0 : static_cast<double>(total) / its.size()},
                   {"retries", trajectory.retries}};
    j["samples"] = trajectory.samples.size();
    if (!trajectory.samples.empty()) {
        const auto& first = trajectory.samples.front();
        const auto& final = trajectory.samples.back();
        j["initial_energy"] = energy_json(first.energy);
        j["final"] = {{"time_ms", final.time},
                      {"block_pos_cm", grid.length() + final.state.u(last)},
                      {"block_vel_cm_per_ms", final.state.v(last)},
                      {"energy", energy_json(final.energy)}};
        j["switching"] = {{"midpoint_node", mid},
                          {"midpoint", switching_count(grid, trajectory, mid)},
                          {"right_end", switching_count(grid, trajectory, last)}};
    }
    return j;
}

ScenarioResult simulate(const ScenarioConfig& cfg) {
    cfg.validate();
    Grid grid(cfg.n_intervals, cfg.rod_length);
    RodModel model(grid, cfg.material, cfg.block);
    const RodState init = initial_state(grid, cfg.strain0, cfg.theta0, cfg.block);
    Trajectory traj = run(model, cfg.solver, init, cfg.t_end, cfg.output_every);
    return {std::move(grid), std::move(traj)};
}

int run_scenario(const ScenarioConfig& cfg, std::ostream& log) {
    try {
        cfg.validate();
    } catch (const ConfigError& e) {
        log << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    }

    std::optional<ScenarioResult> result;
    try {
        result.emplace(simulate(cfg));
    } catch (const ConfigError& e) {
        log << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const NonConvergence& e) {
        log << "solver did not converge: " << e.what() << " after " << e.iterations()
            << " Newton iterations, residual " << e.residual_norm() << '\n';
        return kExitSolver;
    } catch (const SingularJacobian& e) {
        log << "solver failure: " << e.what() << '\n';
        return kExitSolver;
    } catch (const NonFiniteState& e) {
        log << "solver failure: " << e.what() << '\n';
        return kExitSolver;
    }

    try {
        std::error_code ec;
        std::filesystem::create_directories(cfg.output_path, ec);
        if (ec) throw IoError("cannot create '" + cfg.output_path.string() + "': " + ec.message());

        const auto& grid = result->grid;
        const auto& traj = result->trajectory;
        std::ostringstream ts;
        write_time_series(ts, grid, traj);
        write_file(cfg.output_path / "timeseries.csv", ts.str());

        if (cfg.snapshots_every > 0) {
            for (std::size_t k = 0; k < traj.samples.size(); k += static_cast<std::size_t>(cfg.snapshots_every)) {
                std::ostringstream snap;
                write_snapshot(snap, grid, traj.samples[k].state);
                char name[48];
                std::snprintf(name, sizeof(name), "snapshot_%06zu.csv", k);
                write_file(cfg.output_path / name, snap.str());
            }
        }
        write_file(cfg.output_path / "summary.json", run_summary(cfg, grid, traj).dump(2) + "\n");
    } catch (const IoError& e) {
        log << "I/O error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace smadamp
