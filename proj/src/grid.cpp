#include "smadamp/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "smadamp/errors.hpp"

namespace smadamp {

namespace {

void check_size(const Grid& grid, const Eigen::VectorXd& values) {
    if (values.size() != grid.size()) {
        throw UsageError("expected " + std::to_string(grid.size()) + " nodal values, got " +
                         std::to_string(values.size()));
    }
}

// Clenshaw-Curtis weights on [-1, 1] for the N+1 Gauss-Lobatto points.
Eigen::VectorXd clenshaw_curtis(int n) {
    using std::numbers::pi;
    Eigen::VectorXd w = Eigen::VectorXd::Zero(n + 1);
    if (n % 2 == 0) {
        w(0) = w(n) = 1.0 / (static_cast<double>(n) * n - 1.0);
    } else {
        w(0) = w(n) = 1.0 / (static_cast<double>(n) * n);
    }
    for (int i = 1; i < n; ++i) {
        const double theta = pi * i / n;
        double v = 1.0;
        if (n % 2 == 0) {
            v -= std::cos(n * theta) / (static_cast<double>(n) * n - 1.0);
            for (int k = 1; k < n / 2; ++k) {
                v -= 2.0 * std::cos(2.0 * k * theta) / (4.0 * k * k - 1.0);
            }
        } else {
            for (int k = 1; k <= (n - 1) / 2; ++k) {
                v -= 2.0 * std::cos(2.0 * k * theta) / (4.0 * k * k - 1.0);
            }
        }
        w(i) = 2.0 * v / n;
    }
    return w;
}

}  // namespace

Grid::Grid(int n_intervals, double length) : n_(n_intervals), length_(length) {
    using std::numbers::pi;
    if (n_intervals < 4) {
        throw ConfigError("grid needs at least 4 intervals, got " + std::to_string(n_intervals));
    }
    if (!(length > 0.0) || !std::isfinite(length)) {
        throw ConfigError("rod length must be positive");
    }
    const int np = n_ + 1;

    nodes_.resize(np);
    for (int i = 0; i < np; ++i) {
        // 1 - cos(pi i / N) written as a sine of a centred angle: symmetric
        // about L/2 and exact at the midpoint
        nodes_(i) = length_ * (1.0 - std::sin(pi * (n_ - 2 * i) / (2.0 * n_))) / 2.0;
    }
    nodes_(0) = 0.0;
    nodes_(n_) = length_;

    bary_.resize(np);
    for (int j = 0; j < np; ++j) {
        const double delta = (j == 0 || j == n_) ? 0.5 : 1.0;
        bary_(j) = (j % 2 == 0 ? 1.0 : -1.0) * delta;
    }

    // x_i - x_j via the product-of-sines identity avoids cancellation for
    // neighbouring nodes; diagonal entries use the negative row sum.
    d1_ = Eigen::MatrixXd::Zero(np, np);
    for (int i = 0; i < np; ++i) {
        double row_sum = 0.0;
        for (int j = 0; j < np; ++j) {
            if (i == j) continue;
            const double dx = length_ * std::sin(pi * (i + j) / (2.0 * n_)) *
                              std::sin(pi * (i - j) / (2.0 * n_));
            d1_(i, j) = (bary_(j) / bary_(i)) / dx;
            row_sum += d1_(i, j);
        }
        d1_(i, i) = -row_sum;
    }
    d2_ = d1_ * d1_;
    d4_ = d2_ * d2_;

    weights_ = clenshaw_curtis(n_) * (length_ / 2.0);
}

Grid build_grid(int n_intervals, double length) { return Grid(n_intervals, length); }

Eigen::VectorXd differentiate(const Grid& grid, const Eigen::VectorXd& values, int order) {
    check_size(grid, values);
    switch (order) {
        case 1: return grid.d1() * values;
        case 2: return grid.d2() * values;
        case 4: return grid.d4() * values;
        default: throw UsageError("derivative order must be 1, 2 or 4");
    }
}

double interpolate(const Grid& grid, const Eigen::VectorXd& values, double x) {
    check_size(grid, values);
    if (!(x >= 0.0 && x <= grid.length())) {
        throw UsageError("interpolation point outside [0, L]");
    }
    const auto& xs = grid.nodes_;
    const auto& w = grid.bary_;
    double num = 0.0;
    double den = 0.0;
    for (int j = 0; j < grid.size(); ++j) {
        if (x == xs(j)) return values(j);
        const double t = w(j) / (x - xs(j));
        num += t * values(j);
        den += t;
    }
    return num / den;
}

double integrate(const Grid& grid, const Eigen::VectorXd& values) {
    check_size(grid, values);
    return grid.quad_weights().dot(values);
}

}  // namespace smadamp
