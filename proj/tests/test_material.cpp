#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "smadamp/errors.hpp"
#include "smadamp/material.hpp"

using namespace smadamp;

namespace {

// Reference values computed independently at 50-digit precision from the
// quadratic in eps^2.
constexpr double kWell210 = 0.1147665710158969;
constexpr double kMax210 = 0.01272664569265669;
constexpr double kWellEnergy210 = -82.52760175503376;
constexpr double kWell208 = 0.11547005383792515;
constexpr double kVanishing = 249.66666666666666;

int count_minima(const std::vector<StationaryPoint>& pts) {
    return static_cast<int>(std::count_if(pts.begin(), pts.end(), [](const StationaryPoint& s) {
        return s.kind == StationaryKind::minimum;
    }));
}

}  // namespace

TEST_CASE("default parameters") {
    const MaterialParams p;
    CHECK(p.k1 == 480.0);
    CHECK(p.k2 == 6.0e6);
    CHECK(p.k3 == 4.5e8);
    CHECK(p.theta1 == 208.0);
    CHECK(p.rho == 11.1);
    CHECK(p.cv == 3.1274);
    CHECK(p.kappa == 1.9e-2);
    CHECK(p.kg == 5.0);
    CHECK(p.nu == 10.0);
    CHECK_NOTHROW(p.validate());
}

TEST_CASE("parameter validation") {
    MaterialParams p;
    p.kg = 0.0;
    p.nu = 0.0;
    CHECK_NOTHROW(p.validate());
    p.nu = -1.0;
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p = {};
    p.cv = 0.0;
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p = {};
    p.k3 = -1.0;
    CHECK_THROWS_AS(p.validate(), ConfigError);
}

TEST_CASE("landau energy examples") {
    const MaterialParams p;
    CHECK(landau_energy(p, 0.0, 210.0) == 0.0);
    CHECK(landau_energy(p, kWell210, 210.0) == doctest::Approx(kWellEnergy210).epsilon(1e-10));
    CHECK(landau_energy(p, 0.1, 208.0) == doctest::Approx(-75.0).epsilon(1e-12));
    CHECK_THROWS_AS(landau_energy(p, 0.1, 0.0), DomainError);
    CHECK_THROWS_AS(landau_energy(p, 0.1, -5.0), DomainError);
}

TEST_CASE("stress examples") {
    const MaterialParams p;
    CHECK(stress(p, 0.0, 250.0) == 0.0);
    CHECK(stress(p, 0.1, 210.0) == doctest::Approx(-1404.0).epsilon(1e-12));
    CHECK(stress(p, 0.05, 210.0) == doctest::Approx(-561.375).epsilon(1e-12));
    CHECK(std::abs(stress(p, kWell210, 210.0)) <= 1e-6 * p.k2);
    CHECK_THROWS_AS(stress(p, 0.1, 0.0), DomainError);
}

TEST_CASE("effective stress examples") {
    const MaterialParams p;
    CHECK(effective_stress(p, 0.0, 0.0, 210.0) == 0.0);
    CHECK(effective_stress(p, 0.0, 1.0, 210.0) == doctest::Approx(10.0));
    CHECK(effective_stress(p, 0.1, 0.0, 210.0) == doctest::Approx(-1404.0).epsilon(1e-12));
    CHECK_THROWS_AS(effective_stress(p, 0.0, 1.0, -1.0), DomainError);
}

TEST_CASE("stationary strains at 280 K") {
    const auto pts = stationary_strains(MaterialParams{}, 280.0);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].strain == 0.0);
    CHECK(pts[0].kind == StationaryKind::minimum);
    CHECK(positive_well_strain(MaterialParams{}, 280.0) == 0.0);
}

TEST_CASE("stationary strains at 210 K") {
    const auto pts = stationary_strains(MaterialParams{}, 210.0);
    REQUIRE(pts.size() == 5);
    const double expected[] = {-kWell210, -kMax210, 0.0, kMax210, kWell210};
    const StationaryKind kinds[] = {StationaryKind::minimum, StationaryKind::maximum,
                                    StationaryKind::minimum, StationaryKind::maximum,
                                    StationaryKind::minimum};
    for (int i = 0; i < 5; ++i) {
        CHECK(std::abs(pts[i].strain - expected[i]) <= 1e-6);
        CHECK(pts[i].kind == kinds[i]);
    }
    CHECK(positive_well_strain(MaterialParams{}, 210.0) ==
          doctest::Approx(kWell210).epsilon(1e-12));
}

TEST_CASE("stationary strains at the reference temperature") {
    const auto pts = stationary_strains(MaterialParams{}, 208.0);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].strain == doctest::Approx(-kWell208).epsilon(1e-12));
    CHECK(pts[1].strain == 0.0);
    CHECK(pts[2].strain == doctest::Approx(kWell208).epsilon(1e-12));
    CHECK(pts[0].kind == StationaryKind::minimum);
    CHECK(pts[2].kind == StationaryKind::minimum);
    CHECK(pts[1].kind == StationaryKind::maximum);
    CHECK_THROWS_AS(stationary_strains(MaterialParams{}, 0.0), DomainError);
}

TEST_CASE("well vanishing temperature") {
    const MaterialParams p;
    CHECK(well_vanishing_temperature(p) == doctest::Approx(kVanishing).epsilon(1e-14));
    CHECK(count_minima(stationary_strains(p, kVanishing - 0.01)) == 3);
    CHECK(count_minima(stationary_strains(p, kVanishing + 0.01)) == 1);
}

TEST_CASE("energy derivative matches stress on random samples") {
    const MaterialParams p;
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> eps(-0.2, 0.2);
    std::uniform_real_distribution<double> temp(200.0, 300.0);
    const double h = 1e-6;
    for (int i = 0; i < 1000; ++i) {
        const double e = eps(rng);
        const double t = temp(rng);
        const double fd =
            (landau_energy(p, e + h, t) - landau_energy(p, e - h, t)) / (2.0 * h);
        const double s = stress(p, e, t);
        CHECK(std::abs(fd - s) <= std::max(1e-5 * std::abs(s), 1e-8));
    }
}

TEST_CASE("tangent stiffness is the stress derivative") {
    const MaterialParams p;
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> eps(-0.2, 0.2);
    std::uniform_real_distribution<double> temp(200.0, 300.0);
    const double h = 1e-6;
    for (int i = 0; i < 200; ++i) {
        const double e = eps(rng);
        const double t = temp(rng);
        const double fd = (stress(p, e + h, t) - stress(p, e - h, t)) / (2.0 * h);
        const double k = tangent_stiffness(p, e, t);
        CHECK(std::abs(fd - k) <= std::max(1e-5 * std::abs(k), 1e-3));
    }
}

TEST_CASE("parity") {
    const MaterialParams p;
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> eps(-0.2, 0.2);
    std::uniform_real_distribution<double> temp(200.0, 300.0);
    for (int i = 0; i < 500; ++i) {
        const double e = eps(rng);
        const double t = temp(rng);
        const double f = landau_energy(p, e, t);
        CHECK(std::abs(landau_energy(p, -e, t) - f) <= 1e-12 * std::abs(f));
        const double s = stress(p, e, t);
        CHECK(std::abs(stress(p, -e, t) + s) <= 1e-12 * std::abs(s));
        const double se = effective_stress(p, e, 0.0, t);
        CHECK(std::abs(effective_stress(p, -e, 0.0, t) + se) <= 1e-12 * std::abs(se));
    }
}

TEST_CASE("minima count by temperature regime") {
    // Below the reference temperature eps = 0 is a maximum; between it and the
    // vanishing temperature three minima coexist; above, only eps = 0.
    const MaterialParams p;
    const double vanish = well_vanishing_temperature(p);
    for (double t = 150.0; t <= 300.0; t += 0.25) {
        const auto pts = stationary_strains(p, t);
        const int m = count_minima(pts);
        CAPTURE(t);
        if (t <= p.theta1) {
            CHECK(m == 2);
            for (const auto& s : pts) {
                if (s.kind == StationaryKind::minimum) CHECK(s.strain != 0.0);
            }
        } else if (t < vanish) {
            CHECK(m == 3);
        } else {
            REQUIRE(pts.size() == 1);
            CHECK(pts[0].strain == 0.0);
            CHECK(m == 1);
        }
        for (const auto& s : pts) CHECK(std::abs(stress(p, s.strain, t)) <= 1e-6 * p.k2);
        for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i - 1].strain < pts[i].strain);
    }
}

TEST_CASE("minima count is non-increasing above the reference temperature") {
    const MaterialParams p;
    int last = 3;
    for (double t = p.theta1 + 0.01; t <= 300.0; t += 0.01) {
        const int m = count_minima(stationary_strains(p, t));
        CHECK(m <= last);
        last = m;
    }
}
