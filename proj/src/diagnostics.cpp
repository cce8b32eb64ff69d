#include "smadamp/diagnostics.hpp"

#include <cmath>

#include "smadamp/errors.hpp"

namespace smadamp {

std::string_view to_string(Phase phase) {
    switch (phase) {
        case Phase::martensite_plus: return "martensite-plus";
        case Phase::martensite_minus: return "martensite-minus";
        case Phase::austenite_like: return "austenite-like";
    }
    return "unknown";
}

std::vector<Phase> classify_phases(const Grid& grid, const MaterialParams& p, const RodState& state) {
    const Eigen::VectorXd eps = strain(grid, state);
    std::vector<Phase> out(static_cast<std::size_t>(grid.size()), Phase::austenite_like);
    for (int i = 0; i < grid.size(); ++i) {
        const double half = 0.5 * positive_well_strain(p, state.theta(i));
        if (half == 0.0) continue;
        if (eps(i) > half) {
            out[static_cast<std::size_t>(i)] = Phase::martensite_plus;
        } else if (eps(i) < -half) {
            out[static_cast<std::size_t>(i)] = Phase::martensite_minus;
        }
    }
    return out;
}

int switching_count(std::span<const double> strain_history) {
    int count = 0;
    int last_sign = 0;
    for (double e : strain_history) {
        if (std::abs(e) < kSwitchingDeadBand) continue;
        const int sign = e > 0.0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign) ++count;
        last_sign = sign;
    }
    return count;
}

std::vector<double> strain_history(const Grid& grid, const Trajectory& trajectory, int node_index) {
    if (node_index < 0 || node_index >= grid.size()) {
        throw UsageError("node index out of range");
    }
    std::vector<double> out;
    out.reserve(trajectory.samples.size());
    const auto row = grid.d1().row(node_index);
    for (const auto& s : trajectory.samples) {
        out.push_back(row.dot(s.state.u));
    }
    return out;
}

int switching_count(const Grid& grid, const Trajectory& trajectory, int node_index) {
    if (trajectory.samples.empty()) throw UsageError("trajectory has no samples");
    const auto history = strain_history(grid, trajectory, node_index);
    return switching_count(history);
}

double loop_dissipation(std::span<const StrainStress> path) {
    if (path.size() < 3) {
        throw UsageError("a loop needs at least 3 points");
    }
    double area = 0.0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const auto& a = path[i];
        const auto& b = path[(i + 1) % path.size()];
        area += 0.5 * (a.stress + b.stress) * (b.strain - a.strain);
    }
    return area;
}

}  // namespace smadamp
