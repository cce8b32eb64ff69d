#pragma once

#include <vector>

namespace smadamp {

/// Material constants of the Ginzburg-Landau rod, in the g / cm / ms / K
/// unit system. Defaults are the Au23Cu30Zn47 set.
struct MaterialParams {
    double rho = 11.1;      ///< density, g/cm^3
    double k1 = 480.0;      ///< g/(ms^2 cm K)
    double k2 = 6.0e6;      ///< g/(ms^2 cm)
    double k3 = 4.5e8;      ///< g/(ms^2 cm)
    double theta1 = 208.0;  ///< reference transformation temperature, K
    double cv = 3.1274;     ///< specific heat capacitance, g/(ms^2 cm K)
    double kappa = 1.9e-2;  ///< heat conductance, cm g/(ms^3 K)
    double kg = 5.0;        ///< Ginzburg (strain-gradient) coefficient, g cm/ms^2
    double nu = 10.0;       ///< viscosity, g/(ms cm)

    /// Throws ConfigError naming the first offending field.
    void validate() const;

    bool operator==(const MaterialParams&) const = default;
};

/// Local Landau free energy density
/// F = k1 (theta - theta1) eps^2 / 2 - k2 eps^4 / 4 + k3 eps^6 / 6.
double landau_energy(const MaterialParams& p, double strain, double theta);

/// Equilibrium stress dF/d(eps).
double stress(const MaterialParams& p, double strain, double theta);

/// Stress plus the viscous contribution nu * d(eps)/dt.
double effective_stress(const MaterialParams& p, double strain, double strain_rate, double theta);

/// d^2F/d(eps)^2, the local tangent stiffness.
double tangent_stiffness(const MaterialParams& p, double strain, double theta);

/// Temperature above which eps = 0 is the only stationary strain.
double well_vanishing_temperature(const MaterialParams& p);

enum class StationaryKind { minimum, maximum, inflection };

struct StationaryPoint {
    double strain;
    StationaryKind kind;
};

/// All real roots of stress(., theta) = 0, ascending.
std::vector<StationaryPoint> stationary_strains(const MaterialParams& p, double theta);

/// Largest positive strain that is a local minimum of the free energy, or 0
/// when only the austenite well exists.
double positive_well_strain(const MaterialParams& p, double theta);

}  // namespace smadamp
