#ifndef QDOT_OBSERVABLES_HPP
#define QDOT_OBSERVABLES_HPP

#include <optional>
#include <string>

#include "qdot/geometry.hpp"
#include "qdot/material.hpp"
#include "qdot/solver.hpp"

namespace qdot {

/// Result of the phonon-bottleneck screening rules.
struct PhononVerdict {
    enum class Rule { none, sub_mev, lo_window };

    bool pass = false;
    Rule violated = Rule::none;
    double delta_e = 0.0;          // eV
    double lo_phonon_energy = 0.0; // eV
    double window_halfwidth = 0.0; // eV

    std::string reason() const;
};

inline constexpr double default_lo_window_halfwidth = 3e-3; // eV

/// Dipole magnitudes below this (nm or e nm) count as exactly zero:
/// forbidden transition, no coupling.
inline constexpr double dipole_zero_threshold = 1e-9;

/// Everything the design cares about for a single dot.
/// The z-origin of the dipole bookkeeping sits at (z00 + z11)/2, so the two
/// state moments are equal in magnitude and oppositely directed; the stored
/// scalar is d = (z11 - z00)/2 in units of e (e nm as a dipole moment).
struct DotCharacterization {
    double delta_e = 0.0;               // E1 - E0, eV
    double z00 = 0.0;                   // <0|z|0>, nm, dot frame
    double z11 = 0.0;                   // <1|z|1>, nm, dot frame
    double builtin_dipole = 0.0;        // d = (z11 - z00)/2, e nm
    double dipole_matrix_element = 0.0; // |<0|z|1>|, nm
    std::optional<double> lifetime;     // T_d, s; empty = no radiative decay
    PhononVerdict phonon;
};

/// Transition energy, moments, matrix element, lifetime and phonon verdict
/// from the two lowest states of a solution.
DotCharacterization characterize(const EigenSolution& solution,
                                 const DotGeometry& geometry,
                                 double window_halfwidth = default_lo_window_halfwidth);

/// V_dd = 2 k |d1| |d2| / (eps_r r12^3), eV, with k = e^2/(4 pi eps0) so the
/// dipole inputs are plain e nm.  A dipole below dipole_zero_threshold gives
/// exactly 0.  Throws domain_error for r12 <= 0 or eps <= 0.
double dipole_dipole_coupling(double d1, double d2, double r12,
                              double epsilon_r = gaas_epsilon_r);

/// T_d = 3 hbar (hbar c)^2 / (4 alpha D^2 dE^3), seconds.  Returns empty for
/// D = 0 (forbidden transition, no radiative decay).
std::optional<double> spontaneous_lifetime(double dipole_matrix_element,
                                           double delta_e);

/// Allowed pi-pulse duration range and the operation budget it implies.
struct PulseWindow {
    double t_min = 0.0; // hbar / (2 V_dd), s
    double t_max = 0.0; // T_d, s
    double n_ops = 0.0; // t_max / t_min
};

PulseWindow pulse_window(double v_dd, double t_d);

/// Pass iff delta_e > 1 meV and |delta_e - hbar omega_LO| > window_halfwidth.
PhononVerdict phonon_window_check(double delta_e, const MaterialParams& material,
                                  double window_halfwidth = default_lo_window_halfwidth);

} // namespace qdot

#endif
