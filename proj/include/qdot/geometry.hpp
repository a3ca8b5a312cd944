#ifndef QDOT_GEOMETRY_HPP
#define QDOT_GEOMETRY_HPP

namespace qdot {

/// One asymmetric dot: an Al_x Ga_{1-x}As step layer of thickness B next to
/// a GaAs layer, total length L, hard walls at both ends, optional DC bias.
struct DotGeometry {
    double barrier_thickness = 0.0; // B, nm
    double total_length = 0.0;      // L, nm
    double mole_fraction = 0.0;     // x of the internal step layer
    double bias_field = 0.0;        // F, kV/cm (0 = unbiased)

    double asymmetry_ratio() const { return barrier_thickness / total_length; }
};

/// Throws domain_error unless 0 <= B < L, L > 0, 0 <= x <= 0.45.
void validate(const DotGeometry& geometry);

} // namespace qdot

#endif
