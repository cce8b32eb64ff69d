#pragma once

#include <functional>
#include <optional>

#include <Eigen/Dense>

#include "smadamp/rod_model.hpp"
#include "smadamp/trajectory.hpp"

namespace smadamp {

enum class JacobianMode {
    finite_difference,  ///< rebuilt every Newton iteration
    reuse_per_step,     ///< built once per time step (modified Newton)
};

struct SolverConfig {
    double dt = 1.0e-4;  ///< ms
    int bdf_order = 2;
    double newton_tol = 1.0e-8;
    double newton_abs_tol = 1.0e-10;
    int max_newton_iters = 25;
    JacobianMode jacobian_mode = JacobianMode::finite_difference;

    void validate() const;

    bool operator==(const SolverConfig&) const = default;
};

using ResidualFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

struct NewtonResult {
    Eigen::VectorXd x;
    int iterations = 0;
    double residual_norm = 0.0;
};

/// Dense forward-difference Jacobian, column step 1e-7 (1 + |x_j|).
Eigen::MatrixXd finite_difference_jacobian(const ResidualFn& f, const Eigen::VectorXd& x,
                                           const Eigen::VectorXd& fx);

/// Damped Newton-Raphson.
///
/// Converged when ||r||_inf <= abs_tol + tol * ||r(guess)||_inf, or when a
/// full Newton step moves every unknown by at most tol * (1 + |x_i|); the
/// second test stops the iteration at the round-off floor of the residual.
/// Each step is halved up to 8 times until the residual norm decreases.
/// Throws NonConvergence, SingularJacobian, or NonFiniteState.
NewtonResult newton_solve(const ResidualFn& residual_fn, const Eigen::VectorXd& guess,
                          const SolverConfig& cfg);

struct StepResult {
    RodState state;
    int newton_iterations = 0;
};

/// Advances one implicit step of size cfg.dt. previous is the state one step
/// of the same size earlier; without it the step falls back to BDF1.
StepResult step(const RodModel& model, const SolverConfig& cfg, const RodState& current,
                const RodState* previous);

/// Time-steps from initial until t_end, recording a sample (with energy
/// report) every output_every steps, including t = 0 and the final time.
/// A step that fails to converge is retried once as two half steps.
Trajectory run(const RodModel& model, const SolverConfig& cfg, const RodState& initial,
               double t_end, int output_every);

}  // namespace smadamp
