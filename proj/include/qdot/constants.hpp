#ifndef QDOT_CONSTANTS_HPP
#define QDOT_CONSTANTS_HPP

namespace qdot {

/// Physical constants in the internal unit system: energies in eV,
/// lengths in nm, times in seconds.
struct PhysicalConstants {
    double hbar;                 // reduced Planck constant, eV s
    double hbar_c;               // hbar * c, eV nm
    double coulomb_k;            // e^2 / (4 pi eps0), eV nm
    double electron_mass_energy; // m0 c^2, eV
    double fine_structure;       // alpha, dimensionless
};

inline constexpr PhysicalConstants constants{
    6.582119569e-16,  // hbar
    197.3269804,      // hbar_c
    1.4399645478,     // coulomb_k
    510998.95000,     // electron_mass_energy
    7.2973525693e-3,  // fine_structure
};

// hbar^2 / (2 m0) = (hbar c)^2 / (2 m0 c^2), eV nm^2.  Divide by the
// relative effective mass to get the kinetic prefactor for a carrier.
inline constexpr double kinetic_scale =
    constants.hbar_c * constants.hbar_c / (2.0 * constants.electron_mass_energy);

namespace units {

inline constexpr double ev_from_mev(double mev) { return mev * 1e-3; }
inline constexpr double mev_from_ev(double ev) { return ev * 1e3; }
inline constexpr double nm_from_cm(double cm) { return cm * 1e7; }
inline constexpr double cm_from_nm(double nm) { return nm * 1e-7; }
inline constexpr double ns_from_s(double s) { return s * 1e9; }
inline constexpr double s_from_ns(double ns) { return ns * 1e-9; }
inline constexpr double ps_from_s(double s) { return s * 1e12; }

// Electric field in kV/cm -> potential-energy slope e*F for an electron,
// eV per nm: 1 kV/cm = 1e-4 V/nm.
inline constexpr double ev_per_nm_from_kv_per_cm(double kv_per_cm) {
    return kv_per_cm * 1e-4;
}

} // namespace units

} // namespace qdot

#endif
