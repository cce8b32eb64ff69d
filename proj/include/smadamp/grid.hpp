#pragma once

#include <Eigen/Dense>

namespace smadamp {

/// Chebyshev-Gauss-Lobatto collocation grid on [0, length].
///
/// Nodes are ordered ascending, x_i = L (1 - cos(pi i / N)) / 2, so node 0 is
/// the fixed end of the rod and node N carries the mass block. The grid owns
/// the first, second and fourth order spectral differentiation matrices and
/// Clenshaw-Curtis quadrature weights. It is immutable after construction.
class Grid {
public:
    Grid(int n_intervals, double length);

    int n_intervals() const noexcept { return n_; }
    int size() const noexcept { return n_ + 1; }
    double length() const noexcept { return length_; }

    const Eigen::VectorXd& nodes() const noexcept { return nodes_; }
    const Eigen::MatrixXd& d1() const noexcept { return d1_; }
    const Eigen::MatrixXd& d2() const noexcept { return d2_; }
    const Eigen::MatrixXd& d4() const noexcept { return d4_; }
    const Eigen::VectorXd& quad_weights() const noexcept { return weights_; }

    /// Node closest to the middle of the rod.
    int midpoint_index() const noexcept { return n_ / 2; }

private:
    int n_;
    double length_;
    Eigen::VectorXd nodes_;
    Eigen::VectorXd bary_;
    Eigen::MatrixXd d1_;
    Eigen::MatrixXd d2_;
    Eigen::MatrixXd d4_;
    Eigen::VectorXd weights_;

    friend double interpolate(const Grid&, const Eigen::VectorXd&, double);
};

Grid build_grid(int n_intervals, double length);

/// Applies the order-1, 2 or 4 differentiation matrix.
Eigen::VectorXd differentiate(const Grid& grid, const Eigen::VectorXd& values, int order);

/// Barycentric evaluation of the nodal interpolant at x in [0, L].
double interpolate(const Grid& grid, const Eigen::VectorXd& values, double x);

/// Clenshaw-Curtis quadrature of the nodal interpolant over [0, L].
double integrate(const Grid& grid, const Eigen::VectorXd& values);

}  // namespace smadamp
