#pragma once

#include <Eigen/Dense>

#include "smadamp/grid.hpp"
#include "smadamp/material.hpp"

namespace smadamp {

/// Nodal fields of the rod at one time level. The block position and
/// velocity are u(L) and v(L).
struct RodState {
    Eigen::VectorXd u;      ///< displacement, cm
    Eigen::VectorXd v;      ///< velocity du/dt, cm/ms
    Eigen::VectorXd theta;  ///< temperature, K
    double time = 0.0;      ///< ms

    int size() const noexcept { return static_cast<int>(u.size()); }
};

/// Mass block at x = L, all quantities per unit rod cross-section.
struct BlockParams {
    double mass_per_area = 200.0;  ///< m / beta, g/cm^2
    double friction = 0.0;         ///< mu_m / beta, g/(cm^2 ms)
    double stiffness = 0.0;        ///< k_m / beta, g/(cm^2 ms^2)
    double v0 = -3.0;              ///< initial block velocity, cm/ms

    void validate() const;

    bool operator==(const BlockParams&) const = default;
};

/// Discrete time derivative of the form dy/dt = lead * y_new + history, used
/// identically for u, v and theta.
struct TimeStencil {
    double lead = 0.0;
    Eigen::VectorXd u_history;
    Eigen::VectorXd v_history;
    Eigen::VectorXd theta_history;

    /// All time derivatives identically zero.
    static TimeStencil stationary(int n_nodes);
    static TimeStencil bdf1(double dt, const RodState& current);
    static TimeStencil bdf2(double dt, const RodState& current, const RodState& previous);
};

/// Residual row layout: [kinematic | momentum | thermal], N+1 rows each.
/// Boundary conditions overwrite fixed rows inside these blocks.
struct ResidualLayout {
    int n_nodes;

    int kinematic(int i) const noexcept { return i; }
    int momentum(int i) const noexcept { return n_nodes + i; }
    int thermal(int i) const noexcept { return 2 * n_nodes + i; }
    int total() const noexcept { return 3 * n_nodes; }

    /// u(0) = 0
    int fixed_end_row() const noexcept { return momentum(0); }
    /// d(eps)/dx = 0 at x = 0
    int left_gradient_row() const noexcept { return momentum(1); }
    /// d(eps)/dx = 0 at x = L
    int right_gradient_row() const noexcept { return momentum(n_nodes - 2); }
    /// rod stress balanced by the block equation of motion
    int traction_row() const noexcept { return momentum(n_nodes - 1); }
    int left_insulation_row() const noexcept { return thermal(0); }
    int right_insulation_row() const noexcept { return thermal(n_nodes - 1); }
};

/// Uniform strain, uniform temperature, velocity ramping linearly from 0 at
/// the fixed end to the block velocity at x = L.
RodState initial_state(const Grid& grid, double strain0, double theta0, const BlockParams& block);

Eigen::VectorXd strain(const Grid& grid, const RodState& state);
Eigen::VectorXd strain_rate(const Grid& grid, const RodState& state);

/// Stacks [u | v | theta] into one unknown vector.
Eigen::VectorXd pack(const RodState& state);
RodState unpack(const Eigen::VectorXd& x, double time);

/// Semi-discrete collocation residual of the coupled rod / block system.
/// Throws NonFiniteState if any entry overflows.
class RodModel {
public:
    RodModel(const Grid& grid, const MaterialParams& material, const BlockParams& block);

    const Grid& grid() const noexcept { return *grid_; }
    const MaterialParams& material() const noexcept { return material_; }
    const BlockParams& block() const noexcept { return block_; }
    ResidualLayout layout() const noexcept { return {grid_->size()}; }

    /// Residual for the packed unknown vector x = [u | v | theta].
    void residual(const Eigen::VectorXd& x, const TimeStencil& history, Eigen::VectorXd& out) const;

    Eigen::VectorXd residual(const RodState& state, const TimeStencil& history) const;

private:
    const Grid* grid_;
    MaterialParams material_;
    BlockParams block_;
};

Eigen::VectorXd residual(const Grid& grid, const MaterialParams& p, const BlockParams& block,
                         const RodState& state_new, const TimeStencil& history);

}  // namespace smadamp
