#pragma once

#include "smadamp/grid.hpp"
#include "smadamp/material.hpp"
#include "smadamp/rod_model.hpp"

namespace smadamp {

/// Energy partition per unit cross-section, g/ms^2.
///
/// potential is the Helmholtz part (Landau + Ginzburg). coupling is the
/// entropic correction -theta dF/dtheta = -k1 theta eps^2 / 2 that turns the
/// Helmholtz energy into internal energy; without it the total is not a
/// conserved quantity of the field equations.
struct EnergyReport {
    double rod_kinetic = 0.0;
    double block_kinetic = 0.0;
    double potential = 0.0;
    double thermal = 0.0;
    double coupling = 0.0;
    double avg_temperature = 0.0;
    double total = 0.0;

    /// Total without the coupling term (Helmholtz energy plus c_v theta).
    double helmholtz_total() const noexcept { return total - coupling; }
};

EnergyReport energy_report(const Grid& grid, const MaterialParams& p, const BlockParams& block,
                           const RodState& state);

}  // namespace smadamp
