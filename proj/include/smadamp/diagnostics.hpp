#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "smadamp/energy.hpp"
#include "smadamp/grid.hpp"
#include "smadamp/material.hpp"
#include "smadamp/rod_model.hpp"
#include "smadamp/trajectory.hpp"

namespace smadamp {

enum class Phase { martensite_plus, martensite_minus, austenite_like };

std::string_view to_string(Phase phase);

/// Per-node phase label. A node is martensite when |eps| exceeds half the
/// positive well strain at the node's temperature; with no nonzero well it is
/// austenite-like.
std::vector<Phase> classify_phases(const Grid& grid, const MaterialParams& p, const RodState& state);

/// Strain magnitudes below this never count as a sign.
inline constexpr double kSwitchingDeadBand = 1e-4;

/// Sign changes along a strain history, skipping samples inside the dead band.
int switching_count(std::span<const double> strain_history);

/// Sign changes of the strain at one node across the trajectory samples.
int switching_count(const Grid& grid, const Trajectory& trajectory, int node_index);

/// Strain at one node for every trajectory sample.
std::vector<double> strain_history(const Grid& grid, const Trajectory& trajectory, int node_index);

struct StrainStress {
    double strain;
    double stress;
};

/// Closed-path integral of stress d(strain), trapezoid rule, the last point
/// joined back to the first. Positive when the loop runs clockwise in the
/// usual strain-horizontal plot, i.e. net work absorbed per cycle.
double loop_dissipation(std::span<const StrainStress> path);

}  // namespace smadamp
