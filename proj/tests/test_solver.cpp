#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "qdot/errors.hpp"
#include "qdot/potential.hpp"
#include "qdot/solver.hpp"

using namespace qdot;

namespace {

double overlap(const EigenSolution& s, std::size_t a, std::size_t b) {
    std::vector<double> prod(s.grid.size());
    for (std::size_t i = 0; i < prod.size(); ++i)
        prod[i] = s.wavefunctions[a][i] * s.wavefunctions[b][i];
    return trapezoid(prod, s.grid[1] - s.grid[0]);
}

} // namespace

TEST_CASE("flat well energies match the analytic box spectrum") {
    const auto solution = solve(build_potential({0.0, 20.0, 0.0, 0.0}, 2001), 2);
    const double e1 = oracle::box_level(1, 20.0, 0.067);
    const double e2 = oracle::box_level(2, 20.0, 0.067);
    CHECK(std::abs(solution.energies[0] - e1) / e1 <= 2e-6);
    CHECK(std::abs(solution.energies[1] - e2) / e2 <= 2e-6);
    CHECK(std::abs(solution.energies[1] / solution.energies[0] - 4.0) <= 1e-5);
}

TEST_CASE("eigenstates are orthonormal to 1e-8") {
    const DotGeometry geometries[] = {
        {0.0, 20.0, 0.0, 0.0},
        {15.0, 20.0, 0.3, 0.0},
        {16.8, 21.0, 0.45, 0.0},
        {4.0, 25.0, 0.1, 50.0},
    };
    for (const auto& g : geometries) {
        CAPTURE(g.barrier_thickness);
        const auto s = solve(build_potential(g, 2001), 2);
        CHECK(std::abs(overlap(s, 0, 0) - 1.0) <= 1e-8);
        CHECK(std::abs(overlap(s, 1, 1) - 1.0) <= 1e-8);
        CHECK(std::abs(overlap(s, 0, 1)) <= 1e-8);
    }
}

TEST_CASE("wavefunctions vanish on the walls and start positive") {
    const auto s = solve(build_potential({15.0, 20.0, 0.3, 0.0}, 1001), 2);
    for (std::size_t k = 0; k < 2; ++k) {
        CHECK(s.wavefunctions[k].front() == 0.0);
        CHECK(s.wavefunctions[k].back() == 0.0);
        double first = 0.0;
        double peak = 0.0;
        for (double v : s.wavefunctions[k]) peak = std::max(peak, std::abs(v));
        for (double v : s.wavefunctions[k]) {
            if (std::abs(v) > 1e-3 * peak) {
                first = v;
                break;
            }
        }
        CHECK(first > 0.0);
    }
}

TEST_CASE("grid refinement converges at second order") {
    // Step at bl = 0.75 so the boundary lands on a node at every resolution.
    const DotGeometry g{15.0, 20.0, 0.3, 0.0};
    const std::size_t points[] = {201, 401, 801};
    double e0[3];
    for (int i = 0; i < 3; ++i)
        e0[i] = solve(build_potential(g, points[i]), 2).energies[0];
    const double coarse = e0[1] - e0[0];
    const double fine = e0[2] - e0[1];
    const double order = std::log2(coarse / fine);
    CHECK(order >= 1.8);
    CHECK(order <= 2.2);
}

TEST_CASE("second eigenvalue also converges at second order") {
    const DotGeometry g{12.6, 18.0, 0.25, 0.0};
    double e1[3];
    const std::size_t points[] = {251, 501, 1001};
    for (int i = 0; i < 3; ++i)
        e1[i] = solve(build_potential(g, points[i]), 2).energies[1];
    const double order = std::log2((e1[1] - e1[0]) / (e1[2] - e1[1]));
    CHECK(order >= 1.8);
    CHECK(order <= 2.2);
}

TEST_CASE("finite differences agree with the shooting integrator") {
    std::mt19937 rng(20260816);
    std::uniform_real_distribution<double> u_length(10.0, 30.0);
    std::uniform_real_distribution<double> u_bl(0.0, 0.9);
    std::uniform_real_distribution<double> u_x(0.05, 0.45);
    std::uniform_real_distribution<double> u_field(0.0, 150.0);
    std::uniform_int_distribution<int> coin(0, 1);

    for (int trial = 0; trial < 20; ++trial) {
        const double length = u_length(rng);
        const double bl = u_bl(rng);
        const double x = u_x(rng);
        const double field = coin(rng) ? u_field(rng) : 0.0;
        const MassModel mm = coin(rng) ? MassModel::position_dependent
                                       : MassModel::uniform_well;
        CAPTURE(trial);
        CAPTURE(length);
        CAPTURE(bl);
        CAPTURE(x);
        CAPTURE(field);

        const auto profile = build_potential({bl * length, length, x, field}, 2001, mm);
        const auto solution = solve(profile, 2);

        oracle::ShootParams params;
        params.step_width = profile.geometry.barrier_thickness;
        params.length = length;
        params.step_height = profile.step_height;
        params.barrier_mass = profile.barrier_mass;
        params.well_mass = profile.well_mass;
        params.tilt = profile.tilt;

        for (std::size_t k = 0; k < 2; ++k) {
            const auto refined = oracle::shooting_energy(solution.energies[k], params);
            REQUIRE(refined.has_value());
            const double rel =
                std::abs(solution.energies[k] - *refined) / std::abs(*refined);
            CHECK(rel <= 1e-4);
        }
    }
}

TEST_CASE("bias-free solves are bitwise reproducible") {
    const auto a = solve(build_potential({15.0, 20.0, 0.3, 0.0}, 1001), 2);
    const auto b = solve(build_potential({15.0, 20.0, 0.3, 0.0}, 1001), 2);
    CHECK(a.energies[0] == b.energies[0]);
    CHECK(a.energies[1] == b.energies[1]);
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t i = 0; i < a.grid.size(); ++i)
            CHECK(a.wavefunctions[k][i] == b.wavefunctions[k][i]);
}

TEST_CASE("state count is validated") {
    const auto profile = build_potential({15.0, 20.0, 0.3, 0.0}, 501);
    CHECK_THROWS_AS(solve(profile, 0), domain_error);
    CHECK_THROWS_AS(solve(profile, 1), domain_error);
    CHECK_THROWS_AS(solve(profile, 500), domain_error);
    CHECK_NOTHROW(solve(profile, 3));
}

TEST_CASE("energies come out strictly ordered") {
    for (double bl : {0.0, 0.3, 0.75, 0.9}) {
        const auto s = solve(build_potential({bl * 20.0, 20.0, 0.3, 0.0}, 1001), 2);
        CHECK(s.energies[1] > s.energies[0]);
    }
}

TEST_CASE("probability density integrates to one") {
    const auto s = solve(build_potential({15.0, 20.0, 0.3, 0.0}, 1001), 2);
    for (std::size_t k = 0; k < 2; ++k) {
        const auto rho = probability_density(s, k);
        CHECK(trapezoid(rho, s.grid[1] - s.grid[0]) == doctest::Approx(1.0).epsilon(1e-10));
    }
    CHECK_THROWS_AS(probability_density(s, 2), domain_error);
}
