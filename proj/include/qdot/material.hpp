#ifndef QDOT_MATERIAL_HPP
#define QDOT_MATERIAL_HPP

namespace qdot {

/// Al_x Ga_{1-x} As material parameters for the direct-gap regime.
struct MaterialParams {
    double mole_fraction;    // x, dimensionless
    double effective_mass;   // m*(x) in units of m0
    double band_offset;      // conduction-band step dEc(x), eV
    double epsilon_r;        // relative dielectric constant
    double lo_phonon_energy; // hbar omega_LO, eV
};

inline constexpr double max_mole_fraction = 0.45;
inline constexpr double gaas_epsilon_r = 12.9;

/// Material model:
///   dEc(x) = 0.6 * 1.247 x  eV   (60/40 split of the direct-gap difference)
///   m*(x)  = 0.067 + 0.083 x     (m0)
///   eps_r  = 12.9, hbar omega_LO = 36.2 meV
/// Throws domain_error for x outside [0, 0.45].
MaterialParams material_for(double mole_fraction);

} // namespace qdot

#endif
