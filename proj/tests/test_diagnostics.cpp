#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "smadamp/diagnostics.hpp"
#include "smadamp/energy.hpp"
#include "smadamp/errors.hpp"

using namespace smadamp;

namespace {

constexpr double kWell210 = 0.1147665710158969;
constexpr double kWellEnergy210 = -82.52760175503376;

// Quasi-static 210 K loop: follow the stress branch until its extremum, jump
// at constant stress to the other branch, reverse symmetrically.
constexpr double kBranchEnd = 0.08914205679617785;  // stress minimum at +eps
constexpr double kPeakStress = 1631.579108244298;   // stress at -kBranchEnd
constexpr double kLanding = 0.12304028817441209;    // outer root at kPeakStress
constexpr double kLoopArea = 738.4267557926890;

RodState uniform(const Grid& g, double eps, double theta, double v_block = 0.0) {
    RodState s;
    s.u = eps * g.nodes();
    s.v = (v_block / g.length()) * g.nodes();
    s.theta = Eigen::VectorXd::Constant(g.size(), theta);
    return s;
}

Trajectory from_states(const std::vector<RodState>& states) {
    Trajectory t;
    double time = 0.0;
    for (const auto& s : states) t.samples.push_back({time += 1.0, s, {}});
    return t;
}

void append_branch(std::vector<StrainStress>& path, double from, double to, int n) {
    const MaterialParams p;
    for (int i = 0; i <= n; ++i) {
        const double e = from + (to - from) * i / n;
        path.push_back({e, stress(p, e, 210.0)});
    }
}

std::vector<StrainStress> hysteresis_loop(int n) {
    std::vector<StrainStress> path;
    append_branch(path, -0.15, -kBranchEnd, n);
    append_branch(path, kLanding, 0.15, n);
    append_branch(path, 0.15, kBranchEnd, n);
    append_branch(path, -kLanding, -0.15, n);
    return path;
}

}  // namespace

TEST_CASE("energy report at rest") {
    const Grid g(40, 1.0);
    BlockParams b;
    const auto e = energy_report(g, MaterialParams{}, b, uniform(g, 0.0, 210.0));
    CHECK(e.rod_kinetic == 0.0);
    CHECK(e.block_kinetic == 0.0);
    CHECK(e.potential == 0.0);
    CHECK(e.coupling == 0.0);
    CHECK(e.avg_temperature == doctest::Approx(210.0).epsilon(1e-13));
    CHECK(e.thermal == doctest::Approx(3.1274 * 210.0).epsilon(1e-12));
}

TEST_CASE("energy report of the initial ramp") {
    const Grid g(40, 1.0);
    const BlockParams b;
    const auto e = energy_report(g, MaterialParams{}, b, initial_state(g, 0.115, 210.0, b));
    CHECK(e.block_kinetic == doctest::Approx(900.0).epsilon(1e-14));
    CHECK(e.rod_kinetic == doctest::Approx(16.65).epsilon(1e-10));
    const double e2 = 0.115 * 0.115;
    const double landau = 480.0 * 2.0 * e2 / 2 - 6e6 * e2 * e2 / 4 + 4.5e8 * e2 * e2 * e2 / 6;
    const double helmholtz = 16.65 + 900.0 + landau + 3.1274 * 210.0;
    CHECK(e.helmholtz_total() == doctest::Approx(helmholtz).epsilon(1e-11));
    CHECK(e.total == doctest::Approx(helmholtz - 0.5 * 480.0 * 210.0 * e2).epsilon(1e-11));
    CHECK(e.total == doctest::Approx(824.3406199).epsilon(1e-9));
}

TEST_CASE("energy report at the well") {
    const Grid g(40, 1.0);
    const MaterialParams p;
    const auto e = energy_report(g, p, BlockParams{}, uniform(g, kWell210, 210.0));
    CHECK(e.potential == doctest::Approx(kWellEnergy210).epsilon(1e-8));
    CHECK(e.coupling == doctest::Approx(-0.5 * p.k1 * 210.0 * kWell210 * kWell210).epsilon(1e-8));
}

TEST_CASE("energy report invariants") {
    const MaterialParams p;
    const BlockParams b;
    const Grid g(16, 2.0);
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> coef(-0.1, 0.1);
    std::uniform_real_distribution<double> temp(200.0, 300.0);
    for (int trial = 0; trial < 50; ++trial) {
        RodState s;
        const auto x = g.nodes().array();
        s.u = coef(rng) * x + coef(rng) * x.square();
        s.v = coef(rng) * x + coef(rng) * x.cube();
        s.theta = temp(rng) + 5.0 * coef(rng) * x;
        const auto e = energy_report(g, p, b, s);
        CHECK(e.rod_kinetic >= 0.0);
        CHECK(e.block_kinetic >= 0.0);
        CHECK(e.thermal >= 0.0);
        const double sum = e.rod_kinetic + e.block_kinetic + e.potential + e.thermal + e.coupling;
        CHECK(std::abs(e.total - sum) <= 1e-12 * std::abs(sum));
        CHECK(e.helmholtz_total() == doctest::Approx(sum - e.coupling).epsilon(1e-12));
    }
}

TEST_CASE("phase classification") {
    const Grid g(16, 1.0);
    const MaterialParams p;
    for (Phase ph : classify_phases(g, p, uniform(g, 0.115, 210.0))) {
        CHECK(ph == Phase::martensite_plus);
    }
    for (Phase ph : classify_phases(g, p, uniform(g, -0.115, 210.0))) {
        CHECK(ph == Phase::martensite_minus);
    }
    for (Phase ph : classify_phases(g, p, uniform(g, 0.0, 210.0))) {
        CHECK(ph == Phase::austenite_like);
    }
    for (double eps : {-0.2, 0.05, 0.115, 0.3}) {
        for (Phase ph : classify_phases(g, p, uniform(g, eps, 280.0))) {
            CHECK(ph == Phase::austenite_like);
        }
    }
    // just below and above half the well strain
    const double half = 0.5 * kWell210;
    CHECK(classify_phases(g, p, uniform(g, half * 0.999, 210.0))[5] == Phase::austenite_like);
    CHECK(classify_phases(g, p, uniform(g, half * 1.001, 210.0))[5] == Phase::martensite_plus);
    CHECK(to_string(Phase::martensite_plus) == "martensite-plus");
    CHECK(to_string(Phase::martensite_minus) == "martensite-minus");
    CHECK(to_string(Phase::austenite_like) == "austenite-like");
}

TEST_CASE("switching count examples") {
    const std::vector<double> flat(10, 0.1);
    CHECK(switching_count(flat) == 0);
    const std::vector<double> two{0.1, -0.1, 0.1};
    CHECK(switching_count(two) == 2);
    const std::vector<double> dead{0.1, 5e-5, -5e-5, 0.1};
    CHECK(switching_count(dead) == 0);
    const std::vector<double> through_zero{0.1, 0.0, -0.1};
    CHECK(switching_count(through_zero) == 1);
    CHECK(switching_count(std::vector<double>{}) == 0);
}

TEST_CASE("switching count on trajectories") {
    const Grid g(8, 1.0);
    const auto t = from_states({uniform(g, 0.1, 210), uniform(g, -0.1, 210), uniform(g, 0.1, 210)});
    CHECK(switching_count(g, t, g.midpoint_index()) == 2);
    const auto hist = strain_history(g, t, 8);
    REQUIRE(hist.size() == 3);
    CHECK(hist[1] == doctest::Approx(-0.1).epsilon(1e-10));
    CHECK_THROWS_AS(switching_count(g, Trajectory{}, 4), UsageError);
    CHECK_THROWS_AS(switching_count(g, t, 9), UsageError);
    CHECK_THROWS_AS(switching_count(g, t, -1), UsageError);
}

TEST_CASE("loop dissipation examples") {
    const std::vector<StrainStress> square{{0, 0}, {0, 1}, {1, 1}, {1, 0}};
    CHECK(loop_dissipation(square) == doctest::Approx(1.0).epsilon(1e-15));

    std::vector<StrainStress> there_and_back;
    const MaterialParams p;
    append_branch(there_and_back, -0.1, 0.1, 50);
    append_branch(there_and_back, 0.1, -0.1, 50);
    CHECK(std::abs(loop_dissipation(there_and_back)) <= 1e-9);

    const std::vector<StrainStress> two{{0, 0}, {1, 1}};
    CHECK_THROWS_AS(loop_dissipation(two), UsageError);
}

TEST_CASE("hysteresis loop at 210 K") {
    const auto path = hysteresis_loop(20000);
    const double area = loop_dissipation(path);
    CHECK(area > 0.0);
    CHECK(area == doctest::Approx(kLoopArea).epsilon(1e-6));
    const MaterialParams p;
    CHECK(stress(p, -kBranchEnd, 210.0) == doctest::Approx(kPeakStress).epsilon(1e-12));
    CHECK(stress(p, kLanding, 210.0) == doctest::Approx(kPeakStress).epsilon(1e-10));
    CHECK(tangent_stiffness(p, kBranchEnd, 210.0) == doctest::Approx(0.0).scale(1e3));
}

TEST_CASE("loop dissipation is antisymmetric under reversal") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<StrainStress> path(3 + trial % 20);
        for (auto& pt : path) pt = {u(rng), 1000.0 * u(rng)};
        const double a = loop_dissipation(path);
        std::vector<StrainStress> rev(path.rbegin(), path.rend());
        CHECK(std::abs(loop_dissipation(rev) + a) <= 1e-12 * 1000.0 * path.size());
    }
}
