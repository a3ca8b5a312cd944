#ifndef QDOT_SOLVER_HPP
#define QDOT_SOLVER_HPP

#include <cstddef>
#include <vector>

#include "qdot/potential.hpp"

namespace qdot {

/// Lowest eigenpairs of the kinetic-plus-step operator with hard-wall ends.
/// Wavefunctions are real envelopes in nm^(-1/2), normalized so that
/// integral |psi|^2 dz = 1, sign fixed so the first nonzero lobe is positive.
struct EigenSolution {
    std::vector<double> grid;                        // z samples, nm
    std::vector<double> energies;                    // eV, strictly increasing
    std::vector<std::vector<double>> wavefunctions;  // psi_k sampled on grid

    std::size_t state_count() const { return energies.size(); }
};

/// Solves -(hbar^2/2) d/dz [ (1/m*(z)) d psi/dz ] + V(z) psi = E psi with
/// psi(0) = psi(L) = 0, by symmetric second-order finite differences with
/// interface-matched half-cell masses.  Requires n_states >= 2.
EigenSolution solve(const PotentialProfile& profile, std::size_t n_states = 2);

/// |psi_state(z)|^2 sampled on the solution grid; integrates to 1.
std::vector<double> probability_density(const EigenSolution& solution,
                                        std::size_t state);

/// Trapezoid integral of a sampled function on a uniform grid.
double trapezoid(const std::vector<double>& values, double spacing);

} // namespace qdot

#endif
