#include "smadamp/energy.hpp"

namespace smadamp {

EnergyReport energy_report(const Grid& grid, const MaterialParams& p, const BlockParams& block,
                           const RodState& state) {
    const Eigen::VectorXd eps = strain(grid, state);
    const Eigen::VectorXd eps_x = grid.d1() * eps;
    const int n = grid.size();

    Eigen::VectorXd kinetic(n), free_energy(n), heat(n), entropic(n);
    for (int i = 0; i < n; ++i) {
        kinetic(i) = 0.5 * p.rho * state.v(i) * state.v(i);
        free_energy(i) = landau_energy(p, eps(i), state.theta(i)) + 0.5 * p.kg * eps_x(i) * eps_x(i);
        heat(i) = p.cv * state.theta(i);
        entropic(i) = -0.5 * p.k1 * state.theta(i) * eps(i) * eps(i);
    }

    EnergyReport r;
    const double v_block = state.v(n - 1);
    r.rod_kinetic = integrate(grid, kinetic);
    r.block_kinetic = 0.5 * block.mass_per_area * v_block * v_block;
    r.potential = integrate(grid, free_energy);
    r.thermal = integrate(grid, heat);
    r.coupling = integrate(grid, entropic);
    r.avg_temperature = integrate(grid, state.theta) / grid.length();
    r.total = r.rod_kinetic + r.block_kinetic + r.potential + r.thermal + r.coupling;
    return r;
}

}  // namespace smadamp
