#include "qdot/material.hpp"

#include <sstream>

#include "qdot/constants.hpp"
#include "qdot/errors.hpp"

namespace qdot {

MaterialParams material_for(double mole_fraction) {
    if (!(mole_fraction >= 0.0 && mole_fraction <= max_mole_fraction)) {
        std::ostringstream msg;
        msg << "mole fraction x = " << mole_fraction
            << " outside the direct-gap validity range [0, " << max_mole_fraction << "]";
        throw domain_error(msg.str());
    }
    return MaterialParams{
        mole_fraction,
        0.067 + 0.083 * mole_fraction,
        0.6 * 1.247 * mole_fraction,
        gaas_epsilon_r,
        units::ev_from_mev(36.2),
    };
}

} // namespace qdot
