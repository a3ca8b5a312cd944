#include "qdot/potential.hpp"

#include <cmath>
#include <sstream>

#include "qdot/constants.hpp"
#include "qdot/errors.hpp"
#include "qdot/material.hpp"

namespace qdot {

void validate(const DotGeometry& geometry) {
    if (!(geometry.total_length > 0.0)) {
        std::ostringstream msg;
        msg << "total length L = " << geometry.total_length << " nm must be positive";
        throw domain_error(msg.str());
    }
    if (!(geometry.barrier_thickness >= 0.0 &&
          geometry.barrier_thickness < geometry.total_length)) {
        std::ostringstream msg;
        msg << "barrier thickness B = " << geometry.barrier_thickness
            << " nm must satisfy 0 <= B < L = " << geometry.total_length << " nm";
        throw domain_error(msg.str());
    }
    material_for(geometry.mole_fraction); // range check on x
}

PotentialProfile build_potential(const DotGeometry& geometry, std::size_t points,
                                 MassModel mass_model) {
    validate(geometry);
    if (points < min_grid_points) {
        std::ostringstream msg;
        msg << "grid resolution " << points << " below the minimum of "
            << min_grid_points << " points";
        throw config_error(msg.str());
    }

    const MaterialParams step_material = material_for(geometry.mole_fraction);
    const MaterialParams well_material = material_for(0.0);

    PotentialProfile profile;
    profile.requested_barrier = geometry.barrier_thickness;
    profile.step_height = step_material.band_offset;
    profile.well_mass = well_material.effective_mass;
    profile.barrier_mass = mass_model == MassModel::position_dependent
                               ? step_material.effective_mass
                               : well_material.effective_mass;
    profile.tilt = units::ev_per_nm_from_kv_per_cm(geometry.bias_field);

    const double length = geometry.total_length;
    const double spacing = length / static_cast<double>(points - 1);

    // Snap the step boundary onto the nearest grid node.
    profile.step_index = static_cast<std::size_t>(
        std::llround(geometry.barrier_thickness / spacing));
    if (profile.step_index >= points - 1) {
        profile.step_index = points - 2; // keep at least one well cell
    }
    const double snapped = static_cast<double>(profile.step_index) * spacing;
    profile.geometry = geometry;
    profile.geometry.barrier_thickness = snapped;

    profile.grid.resize(points);
    profile.potential.resize(points);
    profile.mass.resize(points);
    profile.cell_inverse_mass.resize(points - 1);

    for (std::size_t i = 0; i < points; ++i) {
        const double z = static_cast<double>(i) * spacing;
        profile.grid[i] = z;
        double step = 0.0;
        if (profile.step_index > 0) {
            if (i < profile.step_index) {
                step = profile.step_height;
            } else if (i == profile.step_index) {
                // Cell-average value at the interface node keeps the
                // discretization second order across the step.
                step = 0.5 * profile.step_height;
            }
        }
        profile.potential[i] = step;
        profile.mass[i] = i < profile.step_index ? profile.barrier_mass
                                                 : profile.well_mass;
        if (geometry.bias_field != 0.0) {
            profile.potential[i] += profile.tilt * z;
        }
    }

    for (std::size_t i = 0; i + 1 < points; ++i) {
        // Cell midpoints never coincide with the snapped step, so each cell
        // is unambiguously on one side.
        const bool in_barrier = i < profile.step_index;
        profile.cell_inverse_mass[i] =
            1.0 / (in_barrier ? profile.barrier_mass : profile.well_mass);
    }

    return profile;
}

} // namespace qdot
