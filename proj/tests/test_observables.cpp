#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "qdot/errors.hpp"
#include "qdot/observables.hpp"
#include "qdot/potential.hpp"
#include "qdot/solver.hpp"
#include "qdot/sweep.hpp"

using namespace qdot;

namespace {

double rel(double value, double reference) {
    return std::abs(value - reference) / std::abs(reference);
}

} // namespace

TEST_CASE("flat well characterization reproduces the box values") {
    const auto c = characterize_dot({0.0, 20.0, 0.0, 0.0}, 2001);
    CHECK(rel(c.delta_e, 0.042092928625511064) <= 5e-6);
    // parity symmetry: both moments sit at the center, no built-in dipole
    CHECK(std::abs(c.z00 - 10.0) <= 1e-8);
    CHECK(std::abs(c.z11 - 10.0) <= 1e-8);
    CHECK(std::abs(c.builtin_dipole) <= 1e-8);
    CHECK(rel(c.dipole_matrix_element, oracle::box_dipole_element(20.0)) <= 1e-6);
    REQUIRE(c.lifetime.has_value());
    CHECK(rel(*c.lifetime, 2.7213961472027873e-6) <= 1e-5);
    CHECK(c.phonon.pass);
}

TEST_CASE("characterization is consistent with the raw solution") {
    const auto profile = build_potential({15.0, 20.0, 0.3, 0.0}, 1001);
    const auto solution = solve(profile, 2);
    const auto c = characterize(solution, profile.geometry);
    CHECK(c.delta_e == solution.energies[1] - solution.energies[0]);
    CHECK(c.builtin_dipole == doctest::Approx(0.5 * (c.z11 - c.z00)).epsilon(1e-15));
    CHECK(c.dipole_matrix_element >= 0.0);
}

TEST_CASE("moments and matrix element are origin independent") {
    const auto profile = build_potential({15.0, 20.0, 0.3, 0.0}, 2001);
    const auto s = solve(profile, 2);
    const auto c = characterize(s, profile.geometry);

    const double shift = 137.5;
    const double h = s.grid[1] - s.grid[0];
    std::vector<double> m00(s.grid.size()), m11(s.grid.size()), m01(s.grid.size());
    for (std::size_t i = 0; i < s.grid.size(); ++i) {
        const double z = s.grid[i] + shift;
        m00[i] = s.wavefunctions[0][i] * s.wavefunctions[0][i] * z;
        m11[i] = s.wavefunctions[1][i] * s.wavefunctions[1][i] * z;
        m01[i] = s.wavefunctions[0][i] * s.wavefunctions[1][i] * z;
    }
    const double d_shifted =
        0.5 * (trapezoid(m11, h) - trapezoid(m00, h));
    const double element_shifted = std::abs(trapezoid(m01, h));
    CHECK(std::abs(d_shifted - c.builtin_dipole) <= 1e-10);
    CHECK(std::abs(element_shifted - c.dipole_matrix_element) <=
          1e-10 * std::max(1.0, c.dipole_matrix_element));
}

TEST_CASE("dipole-dipole coupling formula") {
    CHECK(rel(dipole_dipole_coupling(1.0, 1.0, 30.0, 12.9), 8.268530277347114e-6) <=
          1e-12);
    SUBCASE("symmetric in the two dipoles") {
        CHECK(dipole_dipole_coupling(1.3, 2.7, 25.0) ==
              dipole_dipole_coupling(2.7, 1.3, 25.0));
    }
    SUBCASE("depends only on dipole magnitudes") {
        CHECK(dipole_dipole_coupling(-1.3, 2.7, 25.0) ==
              dipole_dipole_coupling(1.3, -2.7, 25.0));
        CHECK(dipole_dipole_coupling(-1.3, -2.7, 25.0) ==
              dipole_dipole_coupling(1.3, 2.7, 25.0));
    }
    SUBCASE("doubling the distance divides the coupling by exactly eight") {
        const double near = dipole_dipole_coupling(2.0, 3.0, 15.0);
        const double far = dipole_dipole_coupling(2.0, 3.0, 30.0);
        CHECK(near == 8.0 * far);
    }
    SUBCASE("a numerically vanishing dipole gives exactly zero") {
        CHECK(dipole_dipole_coupling(5e-10, 2.0, 30.0) == 0.0);
        CHECK(dipole_dipole_coupling(2.0, -5e-10, 30.0) == 0.0);
        CHECK(dipole_dipole_coupling(0.0, 0.0, 30.0) == 0.0);
    }
    SUBCASE("invalid inputs") {
        CHECK_THROWS_AS(dipole_dipole_coupling(1.0, 1.0, 0.0), domain_error);
        CHECK_THROWS_AS(dipole_dipole_coupling(1.0, 1.0, -5.0), domain_error);
        CHECK_THROWS_AS(dipole_dipole_coupling(1.0, 1.0, 30.0, 0.0), domain_error);
        CHECK_THROWS_AS(dipole_dipole_coupling(1.0, 1.0, 30.0, -1.0), domain_error);
    }
}

TEST_CASE("spontaneous lifetime scaling") {
    const auto base = spontaneous_lifetime(3.603, 0.0421);
    REQUIRE(base.has_value());
    CHECK(rel(*base, 2.7193169495292485e-6) <= 1e-12);

    SUBCASE("doubling the matrix element quarters the lifetime exactly") {
        const auto quarter = spontaneous_lifetime(2.0 * 3.603, 0.0421);
        REQUIRE(quarter.has_value());
        CHECK(*base == 4.0 * *quarter);
    }
    SUBCASE("doubling the transition energy divides by exactly eight") {
        const auto eighth = spontaneous_lifetime(3.603, 2.0 * 0.0421);
        REQUIRE(eighth.has_value());
        CHECK(*base == 8.0 * *eighth);
    }
    SUBCASE("a forbidden transition never decays") {
        CHECK_FALSE(spontaneous_lifetime(0.0, 0.0421).has_value());
        CHECK_FALSE(spontaneous_lifetime(1e-12, 0.0421).has_value());
    }
    SUBCASE("transition energy must be positive") {
        CHECK_THROWS_AS(spontaneous_lifetime(3.6, 0.0), domain_error);
        CHECK_THROWS_AS(spontaneous_lifetime(3.6, -0.01), domain_error);
    }
}

TEST_CASE("pulse window endpoints and budget") {
    const auto fast = pulse_window(0.14e-3, 2.8e-6);
    CHECK(rel(fast.t_min, 2.350756988928572e-12) <= 1e-12);
    CHECK(fast.t_max == 2.8e-6);
    CHECK(rel(fast.n_ops, 2.8e-6 / 2.350756988928572e-12) <= 1e-12);

    const auto slow = pulse_window(0.038e-3, 1.1e-6);
    CHECK(rel(slow.t_min, 8.660683643421052e-12) <= 1e-12);

    SUBCASE("t_min times twice the coupling recovers hbar") {
        for (double v : {1e-5, 3.8e-5, 1.4e-4, 2e-3}) {
            const auto w = pulse_window(v, 1e-6);
            CHECK(rel(w.t_min * 2.0 * v, constants.hbar) <= 1e-14);
        }
    }
    SUBCASE("stronger coupling buys more operations") {
        CHECK(pulse_window(2e-4, 1e-6).n_ops > pulse_window(1e-4, 1e-6).n_ops);
    }
    SUBCASE("invalid inputs") {
        CHECK_THROWS_AS(pulse_window(0.0, 1e-6), domain_error);
        CHECK_THROWS_AS(pulse_window(-1e-4, 1e-6), domain_error);
        CHECK_THROWS_AS(pulse_window(1e-4, 0.0), domain_error);
    }
}

TEST_CASE("phonon screening rules") {
    const auto material = material_for(0.3);

    SUBCASE("transitions below one meV fail") {
        const auto v = phonon_window_check(0.5e-3, material);
        CHECK_FALSE(v.pass);
        CHECK(v.violated == PhononVerdict::Rule::sub_mev);
        CHECK(v.reason().find("1 meV") != std::string::npos);
    }
    SUBCASE("exactly one meV still fails") {
        CHECK_FALSE(phonon_window_check(1e-3, material).pass);
    }
    SUBCASE("resonance with the LO phonon fails") {
        const auto v = phonon_window_check(0.0362, material);
        CHECK_FALSE(v.pass);
        CHECK(v.violated == PhononVerdict::Rule::lo_window);
    }
    SUBCASE("inside the default window fails, outside passes") {
        CHECK_FALSE(phonon_window_check(0.0342, material).pass);
        CHECK_FALSE(phonon_window_check(0.0380, material).pass);
        CHECK(phonon_window_check(0.0320, material).pass);
        CHECK(phonon_window_check(0.0400, material).pass);
    }
    SUBCASE("window width is adjustable") {
        CHECK(phonon_window_check(0.0342, material, 1e-3).pass);
        CHECK_FALSE(phonon_window_check(0.0342, material, 5e-3).pass);
    }
    SUBCASE("passing verdict reports no violation") {
        const auto v = phonon_window_check(0.0800, material);
        CHECK(v.pass);
        CHECK(v.violated == PhononVerdict::Rule::none);
    }
}
