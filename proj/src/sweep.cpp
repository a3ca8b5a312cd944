#include "qdot/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>

#include "qdot/errors.hpp"
#include "qdot/parallel.hpp"
#include "qdot/solver.hpp"

namespace qdot {

namespace {

constexpr double bl_max = 0.95;
constexpr double golden = 0.6180339887498949;

void check_spec(const SweepSpec& spec) {
    if (spec.bl_values.empty() || spec.x_values.empty())
        throw domain_error("sweep needs at least one bl and one x value");
    for (double bl : spec.bl_values)
        if (!(bl >= 0.0 && bl <= bl_max))
            throw domain_error("asymmetry ratio " + std::to_string(bl) +
                               " outside [0, " + std::to_string(bl_max) + "]");
    if (spec.r12_override && !(*spec.r12_override > 0.0))
        throw domain_error("r12 override must be positive");
}

[[noreturn]] void rethrow_tagged(double x, double bl) {
    std::ostringstream tag;
    tag << "at (x = " << x << ", bl = " << bl << "): ";
    try {
        throw;
    } catch (const domain_error& e) {
        throw domain_error(tag.str() + e.what());
    } catch (const config_error& e) {
        throw config_error(tag.str() + e.what());
    } catch (const numeric_error& e) {
        throw numeric_error(tag.str() + e.what());
    } catch (const std::exception& e) {
        throw numeric_error(tag.str() + e.what());
    }
}

SweepRow row_from(const DotCharacterization& c, double bl, double x) {
    SweepRow row;
    row.bl = bl;
    row.x = x;
    row.delta_e = c.delta_e;
    row.builtin_dipole = c.builtin_dipole;
    row.dipole_matrix_element = c.dipole_matrix_element;
    row.t_d = c.lifetime;
    row.phonon_ok = c.phonon.pass;
    return row;
}

std::vector<SweepRow> run_single_dot_sweep(const SweepSpec& spec, std::size_t workers) {
    check_spec(spec);
    const std::size_t nx = spec.x_values.size();
    const std::size_t nb = spec.bl_values.size();
    std::vector<SweepRow> rows(nx * nb);
    parallel_for(nx * nb, workers, [&](std::size_t i) {
        const double x = spec.x_values[i / nb];
        const double bl = spec.bl_values[i % nb];
        try {
            DotGeometry g{bl * spec.length, spec.length, x, 0.0};
            rows[i] = row_from(characterize_dot(g, spec.resolution, spec.mass_model), bl, x);
        } catch (...) {
            rethrow_tagged(x, bl);
        }
    });
    return rows;
}

double register_length(double center, double spread, std::size_t i, std::size_t n) {
    if (n == 1) return center;
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    return center - spread + 2.0 * spread * t;
}

} // namespace

DotCharacterization characterize_dot(const DotGeometry& geometry, std::size_t resolution,
                                     MassModel mass_model) {
    PotentialProfile profile = build_potential(geometry, resolution, mass_model);
    EigenSolution solution = solve(profile, 2);
    return characterize(solution, profile.geometry);
}

std::vector<SweepRow> sweep_transition_energy(const SweepSpec& spec, std::size_t workers) {
    return run_single_dot_sweep(spec, workers);
}

std::vector<SweepRow> sweep_lifetime(const SweepSpec& spec, std::size_t workers) {
    return run_single_dot_sweep(spec, workers);
}

std::vector<SweepRow> sweep_coupling(const SweepSpec& spec, std::size_t workers) {
    check_spec(spec);
    const double r12 = spec.r12_override
                           ? *spec.r12_override
                           : pair_distance(spec.paired_length_1, spec.paired_length_2,
                                           spec.barrier_width);
    const std::size_t nx = spec.x_values.size();
    const std::size_t nb = spec.bl_values.size();
    std::vector<SweepRow> rows(nx * nb);
    parallel_for(nx * nb, workers, [&](std::size_t i) {
        const double x = spec.x_values[i / nb];
        const double bl = spec.bl_values[i % nb];
        try {
            DotGeometry g1{bl * spec.paired_length_1, spec.paired_length_1, x, 0.0};
            DotGeometry g2{bl * spec.paired_length_2, spec.paired_length_2, x, 0.0};
            auto c1 = characterize_dot(g1, spec.resolution, spec.mass_model);
            auto c2 = characterize_dot(g2, spec.resolution, spec.mass_model);
            SweepRow row = row_from(c1, bl, x);
            row.v_dd = dipole_dipole_coupling(c1.builtin_dipole, c2.builtin_dipole, r12);
            row.phonon_ok = c1.phonon.pass && c2.phonon.pass;
            rows[i] = row;
        } catch (...) {
            rethrow_tagged(x, bl);
        }
    });
    return rows;
}

BaselineResult symmetric_baseline(double length, double bias_field, double barrier_width,
                                  std::size_t resolution, MassModel mass_model) {
    if (!(barrier_width > 0.0))
        throw domain_error("barrier width must be positive");
    BaselineResult result;
    result.dot = characterize_dot(DotGeometry{0.0, length, 0.0, bias_field},
                                  resolution, mass_model);
    result.r12 = pair_distance(length, length, barrier_width);
    result.v_dd = dipole_dipole_coupling(result.dot.builtin_dipole,
                                         result.dot.builtin_dipole, result.r12);
    if (result.v_dd > 0.0 && result.dot.lifetime)
        result.window = pulse_window(result.v_dd, *result.dot.lifetime);
    return result;
}

namespace {

struct Evaluation {
    SweepRow row;
    double value = -std::numeric_limits<double>::infinity();
    bool feasible = false;
};

struct OptimalContext {
    double x = 0.0;
    double length = 0.0;
    double barrier = 0.0;
    std::size_t resolution = 0;
    Objective objective = Objective::max_n_ops;
    MassModel mass_model = MassModel::uniform_well;
};

Evaluation evaluate_bl(double bl, const OptimalContext& ctx) {
    DotGeometry g{bl * ctx.length, ctx.length, ctx.x, 0.0};
    DotCharacterization c;
    try {
        c = characterize_dot(g, ctx.resolution, ctx.mass_model);
    } catch (...) {
        rethrow_tagged(ctx.x, bl);
    }

    Evaluation ev;
    ev.row = row_from(c, bl, ctx.x);
    const double r12 = pair_distance(ctx.length, ctx.length, ctx.barrier);
    const double v_dd =
        dipole_dipole_coupling(c.builtin_dipole, c.builtin_dipole, r12);
    if (v_dd > 0.0) ev.row.v_dd = v_dd;

    if (!c.phonon.pass || !c.lifetime) return ev;

    switch (ctx.objective) {
    case Objective::max_n_ops:
        if (v_dd <= 0.0) return ev;
        ev.value = pulse_window(v_dd, *c.lifetime).n_ops;
        break;
    case Objective::max_lifetime:
        ev.value = *c.lifetime;
        break;
    case Objective::max_coupling:
        if (v_dd <= 0.0) return ev;
        ev.value = v_dd;
        break;
    }
    ev.feasible = true;
    return ev;
}

} // namespace

OptimalResult find_optimal(double mole_fraction, double length, Objective objective,
                           double barrier_width, std::size_t resolution, double bl_step,
                           MassModel mass_model) {
    if (!(bl_step > 0.0) || bl_step > 0.005 + 1e-12)
        throw domain_error("bl search step must lie in (0, 0.005]");
    if (!(barrier_width > 0.0))
        throw domain_error("barrier width must be positive");

    OptimalContext ctx{mole_fraction, length, barrier_width, resolution, objective,
                       mass_model};

    Evaluation best;
    double best_bl = 0.0;
    std::size_t sub_mev = 0;
    std::size_t lo_window = 0;
    auto consider = [&](double bl) {
        Evaluation ev = evaluate_bl(bl, ctx);
        if (!ev.row.phonon_ok) {
            if (ev.row.delta_e <= 1e-3)
                ++sub_mev;
            else
                ++lo_window;
        }
        if (ev.feasible && ev.value > best.value) {
            best = ev;
            best_bl = bl;
        }
        return ev;
    };

    const std::size_t steps = static_cast<std::size_t>(std::floor(bl_max / bl_step + 0.5));
    for (std::size_t i = 0; i <= steps; ++i)
        consider(std::min(static_cast<double>(i) * bl_step, bl_max));

    if (!best.feasible) {
        std::ostringstream msg;
        msg << "no asymmetry ratio in [0, " << bl_max << "] satisfies the phonon rules ("
            << sub_mev << " points below 1 meV, " << lo_window
            << " points inside the LO window)";
        throw infeasible_error(msg.str());
    }

    double lo = std::max(0.0, best_bl - bl_step);
    double hi = std::min(bl_max, best_bl + bl_step);
    double a = hi - golden * (hi - lo);
    double b = lo + golden * (hi - lo);
    Evaluation ea = consider(a);
    Evaluation eb = consider(b);
    for (int iter = 0; iter < 48 && hi - lo > 1e-10; ++iter) {
        if (ea.value > eb.value) {
            hi = b;
            b = a;
            eb = ea;
            a = hi - golden * (hi - lo);
            ea = consider(a);
        } else {
            lo = a;
            a = b;
            ea = eb;
            b = lo + golden * (hi - lo);
            eb = consider(b);
        }
    }

    OptimalResult result;
    result.bl = best_bl;
    result.objective_value = best.value;
    result.row = best.row;
    return result;
}

RegisterDesign design_register(std::size_t n_dots, double length_center,
                               double length_spread, double barrier_width,
                               double mole_fraction, std::optional<double> asymmetry,
                               std::size_t resolution, double separation_factor,
                               MassModel mass_model) {
    if (n_dots < 2) throw domain_error("a register needs at least two dots");
    if (length_spread < 0.0) throw domain_error("length spread must be nonnegative");
    if (!(barrier_width > 0.0)) throw domain_error("barrier width must be positive");
    if (!(separation_factor > 0.0))
        throw domain_error("separation factor must be positive");
    if (asymmetry && !(*asymmetry >= 0.0 && *asymmetry <= bl_max))
        throw domain_error("asymmetry ratio outside [0, " + std::to_string(bl_max) + "]");

    RegisterDesign design;
    design.barrier_width = barrier_width;
    design.asymmetry_ratio =
        asymmetry ? *asymmetry
                  : find_optimal(mole_fraction, length_center, Objective::max_n_ops,
                                 barrier_width, resolution, 0.005, mass_model)
                        .bl;

    std::vector<double> centers(n_dots);
    design.dots.reserve(n_dots);
    design.characterizations.resize(n_dots);
    for (std::size_t i = 0; i < n_dots; ++i) {
        const double length = register_length(length_center, length_spread, i, n_dots);
        if (!(length > 0.0))
            throw domain_error("length spread drives dot " + std::to_string(i) +
                               " to a nonpositive length");
        design.dots.push_back(
            DotGeometry{design.asymmetry_ratio * length, length, mole_fraction, 0.0});
        centers[i] = i == 0 ? 0.5 * length
                            : centers[i - 1] + 0.5 * design.dots[i - 1].total_length +
                                  barrier_width + 0.5 * length;
    }

    parallel_for(n_dots, 0, [&](std::size_t i) {
        design.characterizations[i] =
            characterize_dot(design.dots[i], resolution, mass_model);
    });

    for (std::size_t i = 0; i < n_dots; ++i) {
        const auto& c = design.characterizations[i];
        if (!c.phonon.pass) {
            std::ostringstream msg;
            msg << "dot " << i << " (L = " << design.dots[i].total_length
                << " nm) fails the phonon rules: " << c.phonon.reason();
            throw infeasible_error(msg.str());
        }
        if (!c.lifetime)
            throw infeasible_error("dot " + std::to_string(i) +
                                   " has no radiative decay channel");
    }

    double max_adjacent = 0.0;
    for (std::size_t i = 0; i + 1 < n_dots; ++i) {
        const double r = centers[i + 1] - centers[i];
        const double v = dipole_dipole_coupling(
            design.characterizations[i].builtin_dipole,
            design.characterizations[i + 1].builtin_dipole, r);
        design.adjacent_coupling.push_back(v);
        max_adjacent = std::max(max_adjacent, v);
        if (v == 0.0)
            throw infeasible_error("dots " + std::to_string(i) + " and " +
                                   std::to_string(i + 1) +
                                   " are uncoupled: a built-in dipole vanishes");
    }
    for (std::size_t i = 0; i + 2 < n_dots; ++i) {
        const double r = centers[i + 2] - centers[i];
        design.next_nearest_coupling.push_back(dipole_dipole_coupling(
            design.characterizations[i].builtin_dipole,
            design.characterizations[i + 2].builtin_dipole, r));
    }

    double min_sep = std::numeric_limits<double>::infinity();
    std::size_t sep_i = 0, sep_j = 1;
    for (std::size_t i = 0; i < n_dots; ++i)
        for (std::size_t j = i + 1; j < n_dots; ++j) {
            const double sep = std::abs(design.characterizations[i].delta_e -
                                        design.characterizations[j].delta_e);
            if (sep < min_sep) {
                min_sep = sep;
                sep_i = i;
                sep_j = j;
            }
        }
    design.min_spectral_separation = min_sep;

    if (min_sep < separation_factor * max_adjacent) {
        std::ostringstream msg;
        msg << "dots " << sep_i << " and " << sep_j
            << " are spectrally indistinguishable: |dE_i - dE_j| = " << min_sep * 1e3
            << " meV < " << separation_factor << " x max adjacent coupling ("
            << separation_factor * max_adjacent * 1e3 << " meV)";
        throw infeasible_error(msg.str());
    }

    for (std::size_t i = 0; i + 2 < n_dots; ++i) {
        const double limit =
            0.2 * std::min(design.adjacent_coupling[i], design.adjacent_coupling[i + 1]);
        if (design.next_nearest_coupling[i] > limit) {
            std::ostringstream msg;
            msg << "next-nearest coupling between dots " << i << " and " << i + 2
                << " (" << design.next_nearest_coupling[i] * 1e3
                << " meV) exceeds a fifth of the adjacent coupling ("
                << limit * 1e3 << " meV)";
            throw infeasible_error(msg.str());
        }
    }

    design.n_ops = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < n_dots; ++i) {
        const double t_max = std::min(*design.characterizations[i].lifetime,
                                      *design.characterizations[i + 1].lifetime);
        design.windows.push_back(pulse_window(design.adjacent_coupling[i], t_max));
        design.n_ops = std::min(design.n_ops, design.windows.back().n_ops);
    }

    return design;
}

} // namespace qdot
