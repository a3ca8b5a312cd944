#include "qdot/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <vector>

#include <lapacke.h>

#include "qdot/constants.hpp"
#include "qdot/errors.hpp"

namespace qdot {

double trapezoid(const std::vector<double>& values, double spacing) {
    double sum = 0.0;
    for (std::size_t i = 1; i + 1 < values.size(); ++i) sum += values[i];
    sum += 0.5 * (values.front() + values.back());
    return sum * spacing;
}

EigenSolution solve(const PotentialProfile& profile, std::size_t n_states) {
    if (n_states < 2) {
        throw domain_error("solve requires at least 2 states (qubit basis)");
    }
    const std::size_t points = profile.grid.size();
    if (points < min_grid_points) {
        throw config_error("potential profile grid below the minimum resolution");
    }
    const std::size_t interior = points - 2;
    if (n_states > interior) {
        std::ostringstream msg;
        msg << "requested " << n_states << " states but the grid supports only "
            << interior;
        throw domain_error(msg.str());
    }

    const double h = profile.spacing();
    const double scale = kinetic_scale / (h * h);

    // Interior node i (grid index i+1) couples through the half-cell inverse
    // masses on both sides: cells i and i+1 of the profile.
    std::vector<double> diag(interior), offd(interior - 1);
    for (std::size_t i = 0; i < interior; ++i) {
        const double beta_left = profile.cell_inverse_mass[i];
        const double beta_right = profile.cell_inverse_mass[i + 1];
        diag[i] = scale * (beta_left + beta_right) + profile.potential[i + 1];
        if (i + 1 < interior) offd[i] = -scale * beta_right;
    }

    const lapack_int n = static_cast<lapack_int>(interior);
    const lapack_int want = static_cast<lapack_int>(n_states);
    std::vector<double> eigenvalues(interior);
    std::vector<double> vectors(interior * n_states);
    std::vector<lapack_int> support(2 * n_states);
    lapack_int found = 0;
    const double abstol = LAPACKE_dlamch('S');

    const lapack_int info = LAPACKE_dstevr(
        LAPACK_COL_MAJOR, 'V', 'I', n, diag.data(), offd.data(),
        0.0, 0.0, 1, want, abstol, &found, eigenvalues.data(), vectors.data(),
        n, support.data());
    if (info != 0 || found != want) {
        std::ostringstream msg;
        msg << "tridiagonal eigensolver failed (grid " << points
            << " points, info " << info << ", converged " << found << "/"
            << want << " states)";
        throw numeric_error(msg.str());
    }

    EigenSolution solution;
    solution.grid = profile.grid;
    solution.energies.assign(eigenvalues.begin(), eigenvalues.begin() + want);
    for (std::size_t k = 1; k < n_states; ++k) {
        if (!(solution.energies[k] > solution.energies[k - 1])) {
            throw numeric_error("eigenvalues not strictly increasing; "
                                "grid too coarse or solver breakdown");
        }
    }

    solution.wavefunctions.resize(n_states);
    for (std::size_t k = 0; k < n_states; ++k) {
        std::vector<double>& psi = solution.wavefunctions[k];
        psi.assign(points, 0.0);
        for (std::size_t i = 0; i < interior; ++i) {
            psi[i + 1] = vectors[k * interior + i];
        }

        std::vector<double> density(points);
        for (std::size_t i = 0; i < points; ++i) density[i] = psi[i] * psi[i];
        const double norm = std::sqrt(trapezoid(density, h));
        double flip = 1.0;
        double peak = 0.0;
        for (double v : psi) peak = std::max(peak, std::abs(v));
        for (std::size_t i = 0; i < points; ++i) {
            if (std::abs(psi[i]) > 1e-3 * peak) {
                flip = psi[i] < 0.0 ? -1.0 : 1.0;
                break;
            }
        }
        const double factor = flip / norm;
        for (double& v : psi) v *= factor;
    }

    return solution;
}

std::vector<double> probability_density(const EigenSolution& solution,
                                        std::size_t state) {
    if (state >= solution.state_count()) {
        std::ostringstream msg;
        msg << "state index " << state << " out of range; solution has "
            << solution.state_count() << " states";
        throw domain_error(msg.str());
    }
    const std::vector<double>& psi = solution.wavefunctions[state];
    std::vector<double> density(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) density[i] = psi[i] * psi[i];
    return density;
}

} // namespace qdot
