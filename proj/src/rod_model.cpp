#include "smadamp/rod_model.hpp"

#include <cmath>
#include <string>

#include "smadamp/errors.hpp"

namespace smadamp {

namespace {

void check_state(const Grid& grid, const RodState& s) {
    const int n = grid.size();
    if (s.u.size() != n || s.v.size() != n || s.theta.size() != n) {
        throw UsageError("rod state does not match grid of " + std::to_string(n) + " nodes");
    }
}

}  // namespace

void BlockParams::validate() const {
    if (!(mass_per_area > 0.0) || !std::isfinite(mass_per_area)) {
        throw ConfigError("block.mass_per_area must be positive");
    }
    if (!(friction >= 0.0) || !std::isfinite(friction)) {
        throw ConfigError("block.friction must be non-negative");
    }
    if (!(stiffness >= 0.0) || !std::isfinite(stiffness)) {
        throw ConfigError("block.stiffness must be non-negative");
    }
    if (!std::isfinite(v0)) {
        throw ConfigError("block.v0 must be finite");
    }
}

TimeStencil TimeStencil::stationary(int n_nodes) {
    TimeStencil s;
    s.lead = 0.0;
    s.u_history = Eigen::VectorXd::Zero(n_nodes);
    s.v_history = Eigen::VectorXd::Zero(n_nodes);
    s.theta_history = Eigen::VectorXd::Zero(n_nodes);
    return s;
}

TimeStencil TimeStencil::bdf1(double dt, const RodState& current) {
    TimeStencil s;
    s.lead = 1.0 / dt;
    s.u_history = -current.u / dt;
    s.v_history = -current.v / dt;
    s.theta_history = -current.theta / dt;
    return s;
}

TimeStencil TimeStencil::bdf2(double dt, const RodState& current, const RodState& previous) {
    TimeStencil s;
    s.lead = 1.5 / dt;
    s.u_history = (previous.u - 4.0 * current.u) / (2.0 * dt);
    s.v_history = (previous.v - 4.0 * current.v) / (2.0 * dt);
    s.theta_history = (previous.theta - 4.0 * current.theta) / (2.0 * dt);
    return s;
}

RodState initial_state(const Grid& grid, double strain0, double theta0, const BlockParams& block) {
    if (!(theta0 > 0.0)) {
        throw DomainError("initial temperature must be positive");
    }
    if (!std::isfinite(strain0)) {
        throw DomainError("initial strain must be finite");
    }
    RodState s;
    s.u = strain0 * grid.nodes();
    s.v = (block.v0 / grid.length()) * grid.nodes();
    s.theta = Eigen::VectorXd::Constant(grid.size(), theta0);
    s.time = 0.0;
    return s;
}

Eigen::VectorXd strain(const Grid& grid, const RodState& state) {
    check_state(grid, state);
    return grid.d1() * state.u;
}

Eigen::VectorXd strain_rate(const Grid& grid, const RodState& state) {
    check_state(grid, state);
    return grid.d1() * state.v;
}

Eigen::VectorXd pack(const RodState& state) {
    const auto n = state.u.size();
    Eigen::VectorXd x(3 * n);
    x << state.u, state.v, state.theta;
    return x;
}

RodState unpack(const Eigen::VectorXd& x, double time) {
    if (x.size() % 3 != 0) {
        throw UsageError("unknown vector length must be a multiple of 3");
    }
    const auto n = x.size() / 3;
    RodState s;
    s.u = x.segment(0, n);
    s.v = x.segment(n, n);
    s.theta = x.segment(2 * n, n);
    s.time = time;
    return s;
}

RodModel::RodModel(const Grid& grid, const MaterialParams& material, const BlockParams& block)
    : grid_(&grid), material_(material), block_(block) {
    material_.validate();
    block_.validate();
}

void RodModel::residual(const Eigen::VectorXd& x, const TimeStencil& history,
                        Eigen::VectorXd& out) const {
    const int n = grid_->size();
    const int last = n - 1;
    if (x.size() != 3 * n || history.u_history.size() != n || history.v_history.size() != n ||
        history.theta_history.size() != n) {
        throw UsageError("residual inputs do not match grid of " + std::to_string(n) + " nodes");
    }
    const auto& p = material_;
    const auto& d1 = grid_->d1();
    const ResidualLayout rows{n};

    const auto u = x.segment(0, n);
    const auto v = x.segment(n, n);
    const auto theta = x.segment(2 * n, n);

    const Eigen::VectorXd du = history.lead * u + history.u_history;
    const Eigen::VectorXd dv = history.lead * v + history.v_history;
    const Eigen::VectorXd dtheta = history.lead * theta + history.theta_history;

    const Eigen::VectorXd eps = d1 * u;
    const Eigen::VectorXd eps_rate = d1 * v;

    Eigen::VectorXd sigma(n);
    for (int i = 0; i < n; ++i) {
        const double e2 = eps(i) * eps(i);
        sigma(i) = eps(i) * (p.k1 * (theta(i) - p.theta1) + e2 * (-p.k2 + e2 * p.k3)) +
                   p.nu * eps_rate(i);
    }
    const Eigen::VectorXd dsigma = d1 * sigma;
    const Eigen::VectorXd ginzburg = grid_->d4() * u;
    const Eigen::VectorXd conduction = grid_->d2() * theta;

    out.resize(rows.total());
    out.segment(0, n) = du - v;
    out.segment(n, n) = p.rho * dv - dsigma + p.kg * ginzburg;
    for (int i = 0; i < n; ++i) {
        out(rows.thermal(i)) = p.cv * dtheta(i) - p.kappa * conduction(i) -
                               p.k1 * theta(i) * eps(i) * eps_rate(i) -
                               p.nu * eps_rate(i) * eps_rate(i);
    }

    out(rows.fixed_end_row()) = u(0);
    out(rows.left_gradient_row()) = d1.row(0).dot(eps);
    out(rows.right_gradient_row()) = d1.row(last).dot(eps);
    out(rows.traction_row()) = sigma(last) + block_.mass_per_area * dv(last) +
                               block_.friction * v(last) + block_.stiffness * u(last);
    out(rows.left_insulation_row()) = d1.row(0).dot(theta);
    out(rows.right_insulation_row()) = d1.row(last).dot(theta);

    if (!out.allFinite()) {
        throw NonFiniteState("residual contains non-finite entries");
    }
}

Eigen::VectorXd RodModel::residual(const RodState& state, const TimeStencil& history) const {
    check_state(*grid_, state);
    Eigen::VectorXd out;
    residual(pack(state), history, out);
    return out;
}

Eigen::VectorXd residual(const Grid& grid, const MaterialParams& p, const BlockParams& block,
                         const RodState& state_new, const TimeStencil& history) {
    return RodModel(grid, p, block).residual(state_new, history);
}

}  // namespace smadamp
