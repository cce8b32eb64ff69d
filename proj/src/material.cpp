#include "smadamp/material.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "smadamp/errors.hpp"

namespace smadamp {

namespace {

void require_positive_temperature(double theta) {
    if (!(theta > 0.0)) {
        throw DomainError("temperature must be positive, got " + std::to_string(theta));
    }
}

}  // namespace

void MaterialParams::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw ConfigError(std::string("material.") + name + " must be positive");
        }
    };
    auto non_negative = [](double v, const char* name) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw ConfigError(std::string("material.") + name + " must be non-negative");
        }
    };
    positive(rho, "rho");
    positive(k1, "k1");
    positive(k2, "k2");
    positive(k3, "k3");
    positive(theta1, "theta1");
    positive(cv, "cv");
    positive(kappa, "kappa");
    non_negative(kg, "kg");
    non_negative(nu, "nu");
}

double landau_energy(const MaterialParams& p, double strain, double theta) {
    require_positive_temperature(theta);
    const double e2 = strain * strain;
    return e2 * (p.k1 * (theta - p.theta1) / 2.0 + e2 * (-p.k2 / 4.0 + e2 * p.k3 / 6.0));
}

double stress(const MaterialParams& p, double strain, double theta) {
    require_positive_temperature(theta);
    const double e2 = strain * strain;
    return strain * (p.k1 * (theta - p.theta1) + e2 * (-p.k2 + e2 * p.k3));
}

double effective_stress(const MaterialParams& p, double strain, double strain_rate, double theta) {
    return stress(p, strain, theta) + p.nu * strain_rate;
}

double tangent_stiffness(const MaterialParams& p, double strain, double theta) {
    require_positive_temperature(theta);
    const double e2 = strain * strain;
    return p.k1 * (theta - p.theta1) + e2 * (-3.0 * p.k2 + 5.0 * e2 * p.k3);
}

double well_vanishing_temperature(const MaterialParams& p) {
    return p.theta1 + p.k2 * p.k2 / (4.0 * p.k1 * p.k3);
}

std::vector<StationaryPoint> stationary_strains(const MaterialParams& p, double theta) {
    require_positive_temperature(theta);

    // Nonzero roots solve k3 z^2 - k2 z + c = 0 with z = eps^2.
    const double c = p.k1 * (theta - p.theta1);
    const double disc = p.k2 * p.k2 - 4.0 * p.k3 * c;

    std::vector<double> zs;
    if (disc == 0.0) {
        zs.push_back(p.k2 / (2.0 * p.k3));
    } else if (disc > 0.0) {
        // Stable pair: q = (k2 + sqrt(disc)) / 2, roots q / k3 and c / q.
        const double q = 0.5 * (p.k2 + std::sqrt(disc));
        zs.push_back(q / p.k3);
        zs.push_back(c / q);
    }

    std::vector<StationaryPoint> out;
    auto classify = [&](double eps) {
        const double curvature = tangent_stiffness(p, eps, theta);
        if (curvature > 0.0) return StationaryKind::minimum;
        if (curvature < 0.0) return StationaryKind::maximum;
        if (eps == 0.0) {
            // Leading even term of F decides: -k2/4 eps^4 once the quadratic vanishes.
            return StationaryKind::maximum;
        }
        return StationaryKind::inflection;
    };

    out.push_back({0.0, classify(0.0)});
    for (double z : zs) {
        if (z > 0.0) {
            const double eps = std::sqrt(z);
            out.push_back({eps, classify(eps)});
            out.push_back({-eps, classify(-eps)});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const StationaryPoint& a, const StationaryPoint& b) { return a.strain < b.strain; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const StationaryPoint& a, const StationaryPoint& b) {
                              return a.strain == b.strain;
                          }),
              out.end());
    return out;
}

double positive_well_strain(const MaterialParams& p, double theta) {
    double well = 0.0;
    for (const auto& s : stationary_strains(p, theta)) {
        if (s.kind == StationaryKind::minimum && s.strain > well) well = s.strain;
    }
    return well;
}

}  // namespace smadamp
