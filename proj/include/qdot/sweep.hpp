#ifndef QDOT_SWEEP_HPP
#define QDOT_SWEEP_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "qdot/observables.hpp"
#include "qdot/potential.hpp"

namespace qdot {

/// Axes and fixed settings for a parameter sweep.
struct SweepSpec {
    std::vector<double> bl_values;       // asymmetry ratios, each in [0, 0.95]
    std::vector<double> x_values;        // mole fractions
    double length = 20.0;                // L for single-dot sweeps, nm
    double paired_length_1 = 19.0;       // L1 for coupling sweeps, nm
    double paired_length_2 = 21.0;       // L2, nm
    double barrier_width = 10.0;         // inter-dot barrier, nm
    std::size_t resolution = default_grid_points;
    MassModel mass_model = MassModel::uniform_well;
    std::optional<double> r12_override;  // nm; default: center-to-center rule
};

/// One sweep sample.  Scalar observables belong to the row's own dot
/// (L1 for paired sweeps); v_dd is set only by coupling sweeps.
struct SweepRow {
    double bl = 0.0;
    double x = 0.0;
    double delta_e = 0.0;                // eV
    double builtin_dipole = 0.0;         // e nm
    double dipole_matrix_element = 0.0;  // nm
    std::optional<double> v_dd;          // eV
    std::optional<double> t_d;           // s
    bool phonon_ok = false;
};

/// Full pipeline for one dot: potential, two lowest states, observables.
DotCharacterization characterize_dot(const DotGeometry& geometry,
                                     std::size_t resolution = default_grid_points,
                                     MassModel mass_model = MassModel::uniform_well);

/// Center-to-center distance of two adjacent dots.
inline double pair_distance(double length_1, double length_2, double barrier_width) {
    return 0.5 * (length_1 + length_2) + barrier_width;
}

/// Rows ordered by (x, bl), one per grid point.  `workers` = 0 picks the
/// default worker count; identical specs yield identical rows regardless.
std::vector<SweepRow> sweep_transition_energy(const SweepSpec& spec,
                                              std::size_t workers = 0);

/// Coupling sweep over the paired dots (same bl and x in both).
std::vector<SweepRow> sweep_coupling(const SweepSpec& spec, std::size_t workers = 0);

/// Lifetime sweep for the single dot of length `spec.length`.
std::vector<SweepRow> sweep_lifetime(const SweepSpec& spec, std::size_t workers = 0);

/// DC-biased symmetric dot paired with an identical twin across the barrier.
struct BaselineResult {
    DotCharacterization dot;
    double v_dd = 0.0;                 // eV
    double r12 = 0.0;                  // nm
    std::optional<PulseWindow> window; // empty when v_dd = 0 or no decay
};

BaselineResult symmetric_baseline(double length, double bias_field,
                                  double barrier_width = 10.0,
                                  std::size_t resolution = default_grid_points,
                                  MassModel mass_model = MassModel::uniform_well);

enum class Objective { max_n_ops, max_lifetime, max_coupling };

struct OptimalResult {
    double bl = 0.0;
    double objective_value = 0.0;
    SweepRow row;
};

/// Coarse grid search (step <= 0.005) plus golden-section refinement of the
/// chosen objective over bl in [0, 0.95], restricted to phonon-window passes.
/// Coupling and operation count pair the dot with itself across the barrier.
/// Throws infeasible_error when no bl passes the phonon rules.
OptimalResult find_optimal(double mole_fraction, double length, Objective objective,
                           double barrier_width = 10.0,
                           std::size_t resolution = default_grid_points,
                           double bl_step = 0.005,
                           MassModel mass_model = MassModel::uniform_well);

/// A stack of n dots with linearly spread lengths sharing one asymmetry
/// ratio and mole fraction.
struct RegisterDesign {
    std::vector<DotGeometry> dots;
    double barrier_width = 0.0;                 // nm
    double asymmetry_ratio = 0.0;               // shared bl
    std::vector<DotCharacterization> characterizations;
    std::vector<double> adjacent_coupling;      // eV, one per adjacent pair
    std::vector<double> next_nearest_coupling;  // eV, one per (i, i+2) pair
    std::vector<PulseWindow> windows;           // per adjacent pair, t_max = min lifetime
    double min_spectral_separation = 0.0;       // eV, over all dot pairs
    double n_ops = 0.0;                         // min over adjacent windows
};

inline constexpr double default_separation_factor = 10.0;

/// Designs the register and verifies its invariants: every dot passes the
/// phonon rules, transition energies are distinguishable (min separation
/// >= separation_factor x max adjacent coupling), and for n >= 3 the
/// next-nearest coupling stays below a fifth of the adjacent coupling.
/// `asymmetry` empty = take bl from find_optimal(max_n_ops) at L_center.
/// Throws infeasible_error with a diagnosis when a check fails.
RegisterDesign design_register(std::size_t n_dots, double length_center,
                               double length_spread, double barrier_width,
                               double mole_fraction,
                               std::optional<double> asymmetry = std::nullopt,
                               std::size_t resolution = default_grid_points,
                               double separation_factor = default_separation_factor,
                               MassModel mass_model = MassModel::uniform_well);

} // namespace qdot

#endif
