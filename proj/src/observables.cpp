#include "qdot/observables.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "qdot/constants.hpp"
#include "qdot/errors.hpp"

namespace qdot {

namespace {

double integrate_weighted(const EigenSolution& solution, std::size_t bra,
                          std::size_t ket, bool weight_by_z) {
    const std::vector<double>& a = solution.wavefunctions[bra];
    const std::vector<double>& b = solution.wavefunctions[ket];
    std::vector<double> integrand(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        integrand[i] = a[i] * b[i] * (weight_by_z ? solution.grid[i] : 1.0);
    }
    const double h = solution.grid[1] - solution.grid[0];
    return trapezoid(integrand, h);
}

} // namespace

std::string PhononVerdict::reason() const {
    std::ostringstream msg;
    const double de_mev = units::mev_from_ev(delta_e);
    switch (violated) {
        case Rule::none:
            msg << "pass: dE = " << de_mev << " meV clears the 1 meV floor and the LO window";
            break;
        case Rule::sub_mev:
            msg << "violation: dE = " << de_mev
                << " meV is below the 1 meV acoustic-phonon floor";
            break;
        case Rule::lo_window:
            msg << "violation: dE = " << de_mev << " meV lies within "
                << units::mev_from_ev(window_halfwidth) << " meV of the LO phonon energy "
                << units::mev_from_ev(lo_phonon_energy) << " meV";
            break;
    }
    return msg.str();
}

PhononVerdict phonon_window_check(double delta_e, const MaterialParams& material,
                                  double window_halfwidth) {
    if (!(window_halfwidth > 0.0)) {
        throw domain_error("phonon window halfwidth must be positive");
    }
    PhononVerdict verdict;
    verdict.delta_e = delta_e;
    verdict.lo_phonon_energy = material.lo_phonon_energy;
    verdict.window_halfwidth = window_halfwidth;
    if (!(delta_e > units::ev_from_mev(1.0))) {
        verdict.pass = false;
        verdict.violated = PhononVerdict::Rule::sub_mev;
    } else if (!(std::abs(delta_e - material.lo_phonon_energy) > window_halfwidth)) {
        verdict.pass = false;
        verdict.violated = PhononVerdict::Rule::lo_window;
    } else {
        verdict.pass = true;
        verdict.violated = PhononVerdict::Rule::none;
    }
    return verdict;
}

DotCharacterization characterize(const EigenSolution& solution,
                                 const DotGeometry& geometry,
                                 double window_halfwidth) {
    if (solution.state_count() < 2) {
        throw domain_error("characterize needs a solution with at least 2 states");
    }

    DotCharacterization out;
    out.delta_e = solution.energies[1] - solution.energies[0];
    out.z00 = integrate_weighted(solution, 0, 0, true);
    out.z11 = integrate_weighted(solution, 1, 1, true);
    out.builtin_dipole = 0.5 * (out.z11 - out.z00);
    out.dipole_matrix_element = std::abs(integrate_weighted(solution, 0, 1, true));
    out.lifetime = spontaneous_lifetime(out.dipole_matrix_element, out.delta_e);
    out.phonon = phonon_window_check(out.delta_e, material_for(geometry.mole_fraction),
                                     window_halfwidth);
    return out;
}

double dipole_dipole_coupling(double d1, double d2, double r12, double epsilon_r) {
    if (!(r12 > 0.0)) {
        std::ostringstream msg;
        msg << "dot separation r12 = " << r12 << " nm must be positive";
        throw domain_error(msg.str());
    }
    if (!(epsilon_r > 0.0)) {
        throw domain_error("relative dielectric constant must be positive");
    }
    if (std::abs(d1) < dipole_zero_threshold || std::abs(d2) < dipole_zero_threshold)
        return 0.0;
    return 2.0 * constants.coulomb_k * std::abs(d1) * std::abs(d2) /
           (epsilon_r * r12 * r12 * r12);
}

std::optional<double> spontaneous_lifetime(double dipole_matrix_element,
                                           double delta_e) {
    if (!(delta_e > 0.0)) {
        throw domain_error("transition energy must be positive");
    }
    const double d_abs = std::abs(dipole_matrix_element);
    if (d_abs < dipole_zero_threshold) {
        return std::nullopt; // forbidden transition: no radiative decay
    }
    const double numerator =
        3.0 * constants.hbar * constants.hbar_c * constants.hbar_c;
    const double denominator = 4.0 * constants.fine_structure * d_abs * d_abs *
                               delta_e * delta_e * delta_e;
    return numerator / denominator;
}

PulseWindow pulse_window(double v_dd, double t_d) {
    if (!(v_dd > 0.0)) {
        throw domain_error("dipole-dipole coupling must be positive for a pulse window");
    }
    if (!(t_d > 0.0)) {
        throw domain_error("lifetime must be positive for a pulse window");
    }
    PulseWindow window;
    window.t_min = constants.hbar / (2.0 * v_dd);
    window.t_max = t_d;
    window.n_ops = window.t_max / window.t_min;
    return window;
}

} // namespace qdot
