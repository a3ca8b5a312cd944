#ifndef QDOT_POTENTIAL_HPP
#define QDOT_POTENTIAL_HPP

#include <cstddef>
#include <vector>

#include "qdot/geometry.hpp"

namespace qdot {

/// Effective-mass assignment along z.
///   uniform_well:       the well (GaAs) mass everywhere.  Default; this is
///                       the convention that reproduces the reference curves.
///   position_dependent: m*(x) inside the step layer, m*(0) in the well,
///                       matched at the interface by the kinetic operator.
enum class MassModel { uniform_well, position_dependent };

/// Sampled band profile for one dot.  The step boundary is snapped onto the
/// grid; `geometry.barrier_thickness` holds the snapped value actually used.
struct PotentialProfile {
    std::vector<double> grid;              // z samples, nm, 0..L inclusive
    std::vector<double> potential;         // V(z_i), eV (cell average at the step node)
    std::vector<double> mass;              // m*(z_i), m0 units
    std::vector<double> cell_inverse_mass; // 1/m* on each cell (size grid.size()-1)
    std::size_t step_index = 0;            // grid index of the snapped interface
    DotGeometry geometry;                  // with barrier_thickness snapped
    double requested_barrier = 0.0;        // B before snapping, nm
    double step_height = 0.0;              // dEc(x), eV
    double barrier_mass = 0.0;             // m* used left of the step, m0
    double well_mass = 0.0;                // m* used right of the step, m0
    double tilt = 0.0;                     // e*F, eV/nm

    double spacing() const { return grid[1] - grid[0]; }
};

inline constexpr std::size_t min_grid_points = 200;
inline constexpr std::size_t default_grid_points = 2001;

/// Piecewise step-plus-tilt profile on a uniform grid of `points` samples.
/// Throws config_error if points < 200, domain_error for bad geometry.
PotentialProfile build_potential(const DotGeometry& geometry,
                                 std::size_t points = default_grid_points,
                                 MassModel mass_model = MassModel::uniform_well);

} // namespace qdot

#endif
