#include <algorithm>
#include <cstddef>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qdot/constants.hpp"
#include "qdot/errors.hpp"
#include "qdot/parallel.hpp"
#include "qdot/sweep.hpp"
#include "qdot/table_io.hpp"

namespace {

using qdot::SweepRow;

using Setter = std::function<void(const std::string&)>;
using SetterTable = std::map<std::string, Setter>;

double to_double(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double parsed = 0.0;
    try {
        parsed = std::stod(value, &pos);
    } catch (...) {
        pos = std::string::npos;
    }
    if (pos != value.size())
        throw qdot::config_error("config key '" + key + "': cannot parse number '" +
                                 value + "'");
    return parsed;
}

std::size_t to_size(const std::string& key, const std::string& value) {
    const double parsed = to_double(key, value);
    if (parsed < 0.0 || parsed != static_cast<double>(static_cast<std::size_t>(parsed)))
        throw qdot::config_error("config key '" + key +
                                 "': expected a nonnegative integer, got '" + value + "'");
    return static_cast<std::size_t>(parsed);
}

void bind_key(SetterTable& table, const std::string& key, double& target) {
    table[key] = [key, &target](const std::string& v) { target = to_double(key, v); };
}

void bind_key(SetterTable& table, const std::string& key, std::optional<double>& target) {
    table[key] = [key, &target](const std::string& v) { target = to_double(key, v); };
}

void bind_key(SetterTable& table, const std::string& key, std::size_t& target) {
    table[key] = [key, &target](const std::string& v) { target = to_size(key, v); };
}

void bind_key(SetterTable& table, const std::string& key, std::optional<std::size_t>& target) {
    table[key] = [key, &target](const std::string& v) { target = to_size(key, v); };
}

void bind_key(SetterTable& table, const std::string& key, std::string& target) {
    table[key] = [&target](const std::string& v) { target = v; };
}

void bind_key(SetterTable& table, const std::string& key, std::vector<double>& target) {
    table[key] = [key, &target](const std::string& v) {
        std::vector<double> values;
        std::istringstream stream(v);
        std::string item;
        while (std::getline(stream, item, ','))
            values.push_back(to_double(key, item));
        if (values.empty())
            throw qdot::config_error("config key '" + key + "': empty list");
        target = std::move(values);
    };
}

qdot::MassModel parse_mass_model(const std::string& name) {
    if (name == "uniform") return qdot::MassModel::uniform_well;
    if (name == "stepped") return qdot::MassModel::position_dependent;
    throw qdot::config_error("unknown mass model '" + name +
                             "' (expected uniform or stepped)");
}

qdot::Objective parse_objective(const std::string& name) {
    if (name == "n-ops") return qdot::Objective::max_n_ops;
    if (name == "lifetime") return qdot::Objective::max_lifetime;
    if (name == "coupling") return qdot::Objective::max_coupling;
    throw qdot::config_error("unknown objective '" + name +
                             "' (expected n-ops, lifetime or coupling)");
}

std::vector<double> make_grid(double lo, double hi, double step) {
    if (!(step > 0.0)) throw qdot::config_error("bl-step must be positive");
    if (hi < lo) throw qdot::config_error("bl-max below bl-min");
    std::vector<double> values;
    const std::size_t count = static_cast<std::size_t>((hi - lo) / step + 1.5);
    values.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double v = lo + static_cast<double>(i) * step;
        if (v > hi + 1e-12) break;
        values.push_back(std::min(v, hi));
    }
    return values;
}

std::string fmt(double value) {
    std::ostringstream s;
    s.precision(6);
    s << value;
    return s.str();
}

std::string fmt_ns(const std::optional<double>& seconds) {
    return seconds ? fmt(qdot::units::ns_from_s(*seconds)) + " ns" : "none";
}

struct GlobalOptions {
    std::size_t grid = qdot::default_grid_points;
    std::string format = "csv";
    std::string out = "-";
    std::size_t workers = 0;
    std::string config;
    std::string mass_model = "uniform";
};

struct CommandOutput {
    std::vector<SweepRow> rows;
    std::string summary;
};

SweepRow row_of(const qdot::DotCharacterization& c, double bl, double x) {
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

int emit_error(const char* type, const std::string& message, int code) {
    nlohmann::json record;
    record["error"]["type"] = type;
    record["error"]["message"] = message;
    std::cerr << record.dump() << '\n';
    return code;
}

int run(int argc, char** argv) {
    CLI::App app{"asymmetric GaAs/AlGaAs quantum dot design toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    SetterTable global_keys;
    app.add_option("--grid", global.grid, "grid points for the eigensolver");
    app.add_option("--format", global.format, "table format: csv or json");
    app.add_option("--out", global.out, "output path, - for stdout");
    app.add_option("--workers", global.workers,
                   "worker threads (0 = QDOT_WORKERS or hardware)");
    app.add_option("--config", global.config, "key = value file overriding flags");
    app.add_option("--mass-model", global.mass_model,
                   "effective mass model: uniform or stepped");
    bind_key(global_keys, "grid", global.grid);
    bind_key(global_keys, "format", global.format);
    bind_key(global_keys, "out", global.out);
    bind_key(global_keys, "workers", global.workers);
    bind_key(global_keys, "mass-model", global.mass_model);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "characterize a single dot");
    SetterTable solve_keys;
    std::optional<double> solve_B, solve_L, solve_x;
    double solve_F = 0.0;
    solve_cmd->add_option("--B", solve_B, "step layer thickness, nm");
    solve_cmd->add_option("--L", solve_L, "total length, nm");
    solve_cmd->add_option("--x", solve_x, "Al mole fraction");
    solve_cmd->add_option("--F", solve_F, "DC bias field, kV/cm");
    bind_key(solve_keys, "B", solve_B);
    bind_key(solve_keys, "L", solve_L);
    bind_key(solve_keys, "x", solve_x);
    bind_key(solve_keys, "F", solve_F);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "sweep the asymmetry ratio grid");
    SetterTable sweep_keys;
    std::optional<std::size_t> sweep_fig;
    std::string sweep_kind;
    std::vector<double> sweep_x;
    double sweep_bl_min = 0.0, sweep_bl_max = 0.95, sweep_bl_step = 0.005;
    double sweep_L = 20.0, sweep_L1 = 19.0, sweep_L2 = 21.0, sweep_barrier = 10.0;
    std::optional<double> sweep_r12;
    sweep_cmd->add_option("--fig", sweep_fig,
                          "preset: 2 transition energies, 3 pair coupling, 4 lifetimes");
    sweep_cmd->add_option("--kind", sweep_kind,
                          "transition, coupling or lifetime (preset overrides)");
    sweep_cmd->add_option("--x", sweep_x, "mole fractions to sweep");
    sweep_cmd->add_option("--bl-min", sweep_bl_min, "lowest asymmetry ratio");
    sweep_cmd->add_option("--bl-max", sweep_bl_max, "highest asymmetry ratio");
    sweep_cmd->add_option("--bl-step", sweep_bl_step, "asymmetry ratio step");
    sweep_cmd->add_option("--L", sweep_L, "single dot length, nm");
    sweep_cmd->add_option("--L1", sweep_L1, "first paired dot length, nm");
    sweep_cmd->add_option("--L2", sweep_L2, "second paired dot length, nm");
    sweep_cmd->add_option("--barrier", sweep_barrier, "inter-dot barrier, nm");
    sweep_cmd->add_option("--r12", sweep_r12, "override the center-to-center distance, nm");
    bind_key(sweep_keys, "fig", sweep_fig);
    bind_key(sweep_keys, "kind", sweep_kind);
    bind_key(sweep_keys, "x", sweep_x);
    bind_key(sweep_keys, "bl-min", sweep_bl_min);
    bind_key(sweep_keys, "bl-max", sweep_bl_max);
    bind_key(sweep_keys, "bl-step", sweep_bl_step);
    bind_key(sweep_keys, "L", sweep_L);
    bind_key(sweep_keys, "L1", sweep_L1);
    bind_key(sweep_keys, "L2", sweep_L2);
    bind_key(sweep_keys, "barrier", sweep_barrier);
    bind_key(sweep_keys, "r12", sweep_r12);

    // optimal
    auto* optimal_cmd = app.add_subcommand("optimal", "search bl for the best dot");
    SetterTable optimal_keys;
    std::optional<double> optimal_x;
    double optimal_L = 20.0, optimal_barrier = 10.0, optimal_step = 0.005;
    std::string optimal_objective = "n-ops";
    optimal_cmd->add_option("--x", optimal_x, "Al mole fraction");
    optimal_cmd->add_option("--L", optimal_L, "dot length, nm");
    optimal_cmd->add_option("--objective", optimal_objective,
                            "n-ops, lifetime or coupling");
    optimal_cmd->add_option("--barrier", optimal_barrier, "pairing barrier, nm");
    optimal_cmd->add_option("--bl-step", optimal_step, "search grid step, <= 0.005");
    bind_key(optimal_keys, "x", optimal_x);
    bind_key(optimal_keys, "L", optimal_L);
    bind_key(optimal_keys, "objective", optimal_objective);
    bind_key(optimal_keys, "barrier", optimal_barrier);
    bind_key(optimal_keys, "bl-step", optimal_step);

    // register
    auto* register_cmd = app.add_subcommand("register", "design a chain of dots");
    SetterTable register_keys;
    std::optional<std::size_t> register_n;
    std::optional<double> register_center, register_spread, register_x, register_bl;
    double register_barrier = 10.0;
    double register_factor = qdot::default_separation_factor;
    register_cmd->add_option("--n", register_n, "number of dots");
    register_cmd->add_option("--L-center", register_center, "center dot length, nm");
    register_cmd->add_option("--L-spread", register_spread, "half spread of lengths, nm");
    register_cmd->add_option("--barrier", register_barrier, "inter-dot barrier, nm");
    register_cmd->add_option("--x", register_x, "Al mole fraction");
    register_cmd->add_option("--bl", register_bl,
                             "shared asymmetry ratio (default: optimized)");
    register_cmd->add_option("--separation-factor", register_factor,
                             "required |dE_i - dE_j| / max adjacent coupling");
    bind_key(register_keys, "n", register_n);
    bind_key(register_keys, "L-center", register_center);
    bind_key(register_keys, "L-spread", register_spread);
    bind_key(register_keys, "barrier", register_barrier);
    bind_key(register_keys, "x", register_x);
    bind_key(register_keys, "bl", register_bl);
    bind_key(register_keys, "separation-factor", register_factor);

    // baseline
    auto* baseline_cmd =
        app.add_subcommand("baseline", "biased symmetric dot for comparison");
    SetterTable baseline_keys;
    std::optional<double> baseline_F, baseline_L;
    double baseline_barrier = 10.0;
    baseline_cmd->add_option("--F", baseline_F, "DC bias field, kV/cm");
    baseline_cmd->add_option("--L", baseline_L, "dot length, nm");
    baseline_cmd->add_option("--barrier", baseline_barrier, "pairing barrier, nm");
    bind_key(baseline_keys, "F", baseline_F);
    bind_key(baseline_keys, "L", baseline_L);
    bind_key(baseline_keys, "barrier", baseline_barrier);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    }

    CLI::App* active = app.get_subcommands().front();
    SetterTable* active_keys = nullptr;
    if (active == solve_cmd) active_keys = &solve_keys;
    if (active == sweep_cmd) active_keys = &sweep_keys;
    if (active == optimal_cmd) active_keys = &optimal_keys;
    if (active == register_cmd) active_keys = &register_keys;
    if (active == baseline_cmd) active_keys = &baseline_keys;

    if (!global.config.empty()) {
        for (const auto& [key, value] : qdot::read_config(global.config)) {
            const Setter* setter = nullptr;
            if (auto it = active_keys->find(key); it != active_keys->end())
                setter = &it->second;
            else if (auto it2 = global_keys.find(key); it2 != global_keys.end())
                setter = &it2->second;
            if (!setter)
                throw qdot::config_error("config key '" + key + "' matches no " +
                                         active->get_name() + " or global option");
            (*setter)(value);
        }
    }

    const qdot::MassModel mass_model = parse_mass_model(global.mass_model);
    const qdot::TableFormat format = qdot::parse_format(global.format);
    const std::size_t workers = global.workers;

    auto require = [](const std::optional<double>& value, const char* flag) {
        if (!value)
            throw qdot::config_error(std::string("missing required option ") + flag);
        return *value;
    };

    CommandOutput output;

    if (active == solve_cmd) {
        qdot::DotGeometry geometry{require(solve_B, "--B"), require(solve_L, "--L"),
                                   require(solve_x, "--x"), solve_F};
        auto c = qdot::characterize_dot(geometry, global.grid, mass_model);
        output.rows = {row_of(c, geometry.asymmetry_ratio(), geometry.mole_fraction)};
        std::ostringstream s;
        s << "solve: delta_e = " << fmt(qdot::units::mev_from_ev(c.delta_e))
          << " meV, d = " << fmt(c.builtin_dipole)
          << " e nm, D = " << fmt(c.dipole_matrix_element)
          << " nm, t_d = " << fmt_ns(c.lifetime)
          << ", phonon = " << (c.phonon.pass ? "pass" : c.phonon.reason());
        output.summary = s.str();
    } else if (active == sweep_cmd) {
        std::string kind = sweep_kind;
        if (sweep_fig) {
            if (*sweep_fig == 2)
                kind = "transition";
            else if (*sweep_fig == 3)
                kind = "coupling";
            else if (*sweep_fig == 4)
                kind = "lifetime";
            else
                throw qdot::config_error("unknown figure preset " +
                                         std::to_string(*sweep_fig));
            if (sweep_x.empty()) sweep_x = {0.2, 0.3, 0.4};
        }
        if (kind.empty()) kind = "transition";
        if (sweep_x.empty()) sweep_x = {0.3};

        qdot::SweepSpec spec;
        spec.bl_values = make_grid(sweep_bl_min, sweep_bl_max, sweep_bl_step);
        spec.x_values = sweep_x;
        spec.length = sweep_L;
        spec.paired_length_1 = sweep_L1;
        spec.paired_length_2 = sweep_L2;
        spec.barrier_width = sweep_barrier;
        spec.resolution = global.grid;
        spec.mass_model = mass_model;
        spec.r12_override = sweep_r12;

        if (kind == "transition")
            output.rows = qdot::sweep_transition_energy(spec, workers);
        else if (kind == "coupling")
            output.rows = qdot::sweep_coupling(spec, workers);
        else if (kind == "lifetime")
            output.rows = qdot::sweep_lifetime(spec, workers);
        else
            throw qdot::config_error("unknown sweep kind '" + kind + "'");

        const SweepRow* best = nullptr;
        for (const auto& row : output.rows) {
            if (kind == "coupling" && !row.v_dd) continue;
            if (kind == "lifetime" && !row.t_d) continue;
            if (!best) {
                best = &row;
                continue;
            }
            if (kind == "coupling" && *row.v_dd > *best->v_dd) best = &row;
            if (kind == "lifetime" && *row.t_d > *best->t_d) best = &row;
            if (kind == "transition" && row.delta_e > best->delta_e) best = &row;
        }
        std::ostringstream s;
        s << "sweep " << kind << ": " << output.rows.size() << " rows";
        if (best) {
            s << ", peak ";
            if (kind == "coupling")
                s << "v_dd = " << fmt(qdot::units::mev_from_ev(*best->v_dd)) << " meV";
            else if (kind == "lifetime")
                s << "t_d = " << fmt_ns(best->t_d);
            else
                s << "delta_e = " << fmt(qdot::units::mev_from_ev(best->delta_e))
                  << " meV";
            s << " at bl = " << fmt(best->bl) << ", x = " << fmt(best->x);
        }
        output.summary = s.str();
    } else if (active == optimal_cmd) {
        const qdot::Objective objective = parse_objective(optimal_objective);
        auto result =
            qdot::find_optimal(require(optimal_x, "--x"), optimal_L, objective,
                               optimal_barrier, global.grid, optimal_step, mass_model);
        output.rows = {result.row};
        std::ostringstream s;
        s << "optimal " << optimal_objective << ": bl = " << fmt(result.bl)
          << ", value = " << fmt(result.objective_value)
          << ", delta_e = " << fmt(qdot::units::mev_from_ev(result.row.delta_e))
          << " meV";
        if (result.row.v_dd)
            s << ", v_dd = " << fmt(qdot::units::mev_from_ev(*result.row.v_dd))
              << " meV";
        s << ", t_d = " << fmt_ns(result.row.t_d);
        output.summary = s.str();
    } else if (active == register_cmd) {
        if (!register_n)
            throw qdot::config_error("missing required option --n");
        auto design = qdot::design_register(
            *register_n, require(register_center, "--L-center"),
            require(register_spread, "--L-spread"), register_barrier,
            require(register_x, "--x"), register_bl, global.grid, register_factor,
            mass_model);
        double max_adjacent = 0.0;
        for (std::size_t i = 0; i < design.dots.size(); ++i) {
            SweepRow row = row_of(design.characterizations[i], design.asymmetry_ratio,
                                  design.dots[i].mole_fraction);
            if (i < design.adjacent_coupling.size())
                row.v_dd = design.adjacent_coupling[i];
            if (i < design.adjacent_coupling.size())
                max_adjacent = std::max(max_adjacent, design.adjacent_coupling[i]);
            output.rows.push_back(row);
        }
        std::ostringstream s;
        s << "register: n = " << design.dots.size() << ", bl = "
          << fmt(design.asymmetry_ratio) << ", min separation = "
          << fmt(qdot::units::mev_from_ev(design.min_spectral_separation))
          << " meV, max adjacent v_dd = " << fmt(qdot::units::mev_from_ev(max_adjacent))
          << " meV (ratio " << fmt(design.min_spectral_separation / max_adjacent)
          << "), n_ops = " << fmt(design.n_ops);
        output.summary = s.str();
    } else if (active == baseline_cmd) {
        auto result =
            qdot::symmetric_baseline(require(baseline_L, "--L"),
                                     require(baseline_F, "--F"), baseline_barrier,
                                     global.grid, mass_model);
        SweepRow row = row_of(result.dot, 0.0, 0.0);
        row.v_dd = result.v_dd;
        output.rows = {row};
        std::ostringstream s;
        s << "baseline: v_dd = " << fmt(qdot::units::mev_from_ev(result.v_dd))
          << " meV, t_d = " << fmt_ns(result.dot.lifetime);
        if (result.window)
            s << ", t_min = " << fmt(result.window->t_min * 1e12)
              << " ps, n_ops = " << fmt(result.window->n_ops);
        output.summary = s.str();
    }

    if (global.out == "-") {
        qdot::emit_table(output.rows, format, std::cout);
        std::cout << output.summary << '\n';
    } else {
        const std::size_t bytes = qdot::emit_table(output.rows, format, global.out);
        std::cout << output.summary << " -> " << global.out << " (" << bytes
                  << " bytes)" << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        return emit_error("usage", e.what(), 2);
    } catch (const qdot::config_error& e) {
        return emit_error("config", e.what(), 2);
    } catch (const qdot::domain_error& e) {
        return emit_error("domain", e.what(), 2);
    } catch (const qdot::infeasible_error& e) {
        return emit_error("infeasible", e.what(), 3);
    } catch (const qdot::numeric_error& e) {
        return emit_error("numeric", e.what(), 3);
    } catch (const qdot::io_error& e) {
        return emit_error("io", e.what(), 4);
    } catch (const std::exception& e) {
        return emit_error("internal", e.what(), 3);
    }
}
