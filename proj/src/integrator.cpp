#include "smadamp/integrator.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "smadamp/energy.hpp"
#include "smadamp/errors.hpp"

namespace smadamp {

namespace {

constexpr int kMaxHalvings = 8;
constexpr double kPivotRatio = 1e-14;

double inf_norm(const Eigen::VectorXd& r) { return r.size() == 0 ? 0.0 : r.cwiseAbs().maxCoeff(); }

Eigen::VectorXd evaluate(const ResidualFn& f, const Eigen::VectorXd& x) {
    Eigen::VectorXd r = f(x);
    if (r.size() != x.size()) {
        throw UsageError("residual function changed the vector length");
    }
    if (!r.allFinite()) {
        throw NonFiniteState("residual contains non-finite entries");
    }
    return r;
}

// Row-equilibrated LU; rows of the rod system span many orders of magnitude.
class LinearSolver {
public:
    explicit LinearSolver(const Eigen::MatrixXd& jac) {
        scale_ = jac.cwiseAbs().rowwise().maxCoeff();
        for (Eigen::Index i = 0; i < scale_.size(); ++i) {
            if (scale_(i) == 0.0) throw SingularJacobian("Jacobian has a zero row");
            scale_(i) = 1.0 / scale_(i);
        }
        lu_.compute(scale_.asDiagonal() * jac);
        const Eigen::VectorXd pivots = lu_.matrixLU().diagonal().cwiseAbs();
        if (!(pivots.minCoeff() >= kPivotRatio * pivots.maxCoeff())) {
            throw SingularJacobian("Jacobian is numerically rank deficient");
        }
    }

    Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const {
        return lu_.solve(scale_.asDiagonal() * rhs);
    }

    /// Line-search merit: 2-norm of the equilibrated residual. The Newton
    /// direction is a descent direction for it; the raw inf-norm mixes units.
    double merit(const Eigen::VectorXd& r) const { return (scale_.asDiagonal() * r).norm(); }

private:
    Eigen::VectorXd scale_;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
};

bool step_is_negligible(const Eigen::VectorXd& dx, const Eigen::VectorXd& x, double tol) {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (std::abs(dx(i)) > tol * (1.0 + std::abs(x(i)))) return false;
    }
    return true;
}

std::string at_time(const std::string& what, double t) {
    std::ostringstream os;
    os << what << " (step ending at t = " << t << " ms)";
    return os.str();
}

}  // namespace

void SolverConfig::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("solver.dt must be positive");
    if (bdf_order < 1 || bdf_order > 2) throw ConfigError("solver.bdf_order must be 1 or 2");
    if (!(newton_tol > 0.0)) throw ConfigError("solver.newton_tol must be positive");
    if (!(newton_abs_tol > 0.0)) throw ConfigError("solver.newton_abs_tol must be positive");
    if (max_newton_iters < 1) throw ConfigError("solver.max_newton_iters must be at least 1");
}

Eigen::MatrixXd finite_difference_jacobian(const ResidualFn& f, const Eigen::VectorXd& x,
                                           const Eigen::VectorXd& fx) {
    const auto n = x.size();
    Eigen::MatrixXd jac(fx.size(), n);
    Eigen::VectorXd xp = x;
    for (Eigen::Index j = 0; j < n; ++j) {
        const double xj = x(j);
        xp(j) = xj + 1e-7 * (1.0 + std::abs(xj));
        const double h = xp(j) - xj;
        jac.col(j) = (evaluate(f, xp) - fx) / h;
        xp(j) = xj;
    }
    return jac;
}

NewtonResult newton_solve(const ResidualFn& residual_fn, const Eigen::VectorXd& guess,
                          const SolverConfig& cfg) {
    NewtonResult res;
    res.x = guess;
    Eigen::VectorXd r = evaluate(residual_fn, res.x);
    double norm = inf_norm(r);
    const double target = cfg.newton_abs_tol + cfg.newton_tol * norm;
    res.residual_norm = norm;
    if (norm <= target) return res;

    const bool reuse = cfg.jacobian_mode == JacobianMode::reuse_per_step;
    std::optional<LinearSolver> solver;
    bool fresh = false;

    while (res.iterations < cfg.max_newton_iters) {
        if (!solver || !reuse) {
            solver.emplace(finite_difference_jacobian(residual_fn, res.x, r));
            fresh = true;
        }
        const Eigen::VectorXd dx = -solver->solve(r);
        if (!dx.allFinite()) throw NonFiniteState("Newton update is not finite");

        const double merit = solver->merit(r);
        double lambda = 1.0;
        Eigen::VectorXd trial = res.x + dx;
        Eigen::VectorXd r_trial = evaluate(residual_fn, trial);
        double trial_merit = solver->merit(r_trial);
        int halvings = 0;
        const bool tiny = step_is_negligible(dx, res.x, cfg.newton_tol);
        while (trial_merit >= merit && !tiny && halvings < kMaxHalvings) {
            lambda *= 0.5;
            ++halvings;
            trial = res.x + lambda * dx;
            r_trial = evaluate(residual_fn, trial);
            trial_merit = solver->merit(r_trial);
        }
        if (trial_merit >= merit && !tiny) {
            if (reuse && !fresh) {
                solver.reset();
                continue;
            }
            throw NonConvergence("line search failed to reduce the residual", res.iterations,
                                 norm);
        }

        ++res.iterations;
        fresh = false;
        res.x = std::move(trial);
        r = std::move(r_trial);
        norm = inf_norm(r);
        res.residual_norm = norm;
        if (norm <= target || (lambda == 1.0 && tiny)) return res;
    }
    throw NonConvergence("Newton iteration limit reached", res.iterations, norm);
}

StepResult step(const RodModel& model, const SolverConfig& cfg, const RodState& current,
                const RodState* previous) {
    const bool second_order = cfg.bdf_order == 2 && previous != nullptr;
    const TimeStencil history = second_order ? TimeStencil::bdf2(cfg.dt, current, *previous)
                                             : TimeStencil::bdf1(cfg.dt, current);

    Eigen::VectorXd guess = pack(current);
    if (previous != nullptr) {
        guess = 2.0 * guess - pack(*previous);
    }

    auto fn = [&model, &history](const Eigen::VectorXd& x) {
        Eigen::VectorXd out;
        model.residual(x, history, out);
        return out;
    };
    NewtonResult nr = newton_solve(fn, guess, cfg);
    return {unpack(nr.x, current.time + cfg.dt), nr.iterations};
}

Trajectory run(const RodModel& model, const SolverConfig& cfg, const RodState& initial,
               double t_end, int output_every) {
    cfg.validate();
    if (!(t_end > 0.0) || !std::isfinite(t_end)) throw UsageError("t_end must be positive");
    if (output_every < 1) throw UsageError("output_every must be at least 1");

    const auto& grid = model.grid();
    const double ratio = t_end / cfg.dt;
    long n_steps = std::lround(ratio);
    if (std::abs(ratio - static_cast<double>(n_steps)) > 1e-9 * ratio) {
        n_steps = static_cast<long>(std::ceil(ratio));
    }

    Trajectory traj;
    traj.newton_iterations.reserve(static_cast<std::size_t>(n_steps));
    traj.samples.reserve(static_cast<std::size_t>(n_steps / output_every + 2));
    auto record = [&](const RodState& s) {
        traj.samples.push_back(
            {s.time, s, energy_report(grid, model.material(), model.block(), s)});
    };

    RodState current = initial;
    current.time = 0.0;
    std::optional<RodState> previous;
    record(current);

    SolverConfig half = cfg;
    half.dt = cfg.dt / 2.0;

    for (long k = 1; k <= n_steps; ++k) {
        const double t_next = static_cast<double>(k) * cfg.dt;
        StepResult result;
        try {
            result = step(model, cfg, current, previous ? &*previous : nullptr);
        } catch (const NonConvergence&) {
            ++traj.retries;
            try {
                StepResult first = step(model, half, current, nullptr);
                StepResult second = step(model, half, first.state, &current);
                result = {std::move(second.state),
                          first.newton_iterations + second.newton_iterations};
            } catch (const NonConvergence& e) {
                throw NonConvergence(at_time(e.what(), t_next), e.iterations(),
                                     e.residual_norm());
            } catch (const SingularJacobian& e) {
                throw SingularJacobian(at_time(e.what(), t_next));
            } catch (const NonFiniteState& e) {
                throw NonFiniteState(at_time(e.what(), t_next));
            }
        } catch (const SingularJacobian& e) {
            throw SingularJacobian(at_time(e.what(), t_next));
        } catch (const NonFiniteState& e) {
            throw NonFiniteState(at_time(e.what(), t_next));
        }
        result.state.time = t_next;
        traj.newton_iterations.push_back(result.newton_iterations);
        previous = std::move(current);
        current = std::move(result.state);
        if (k % output_every == 0 || k == n_steps) record(current);
    }
    return traj;
}

}  // namespace smadamp
