#include "qdot/table_io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "qdot/constants.hpp"
#include "qdot/errors.hpp"

namespace qdot {

namespace {

std::string significant(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", value);
    return buf;
}

std::string trim(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

void write_csv(const std::vector<SweepRow>& rows, std::ostream& sink) {
    sink << table_header << '\n';
    for (const auto& row : rows) {
        sink << significant(row.bl) << ',' << significant(row.x) << ','
             << significant(units::mev_from_ev(row.delta_e)) << ','
             << significant(row.builtin_dipole) << ','
             << significant(row.dipole_matrix_element) << ',';
        if (row.v_dd) sink << significant(units::mev_from_ev(*row.v_dd));
        sink << ',';
        if (row.t_d) sink << significant(units::ns_from_s(*row.t_d));
        sink << ',' << (row.phonon_ok ? "true" : "false") << '\n';
    }
}

void write_json(const std::vector<SweepRow>& rows, std::ostream& sink) {
    nlohmann::json table = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json item;
        item["bl"] = row.bl;
        item["x"] = row.x;
        item["delta_e_meV"] = units::mev_from_ev(row.delta_e);
        item["d_enm"] = row.builtin_dipole;
        item["D_nm"] = row.dipole_matrix_element;
        item["v_dd_meV"] =
            row.v_dd ? nlohmann::json(units::mev_from_ev(*row.v_dd)) : nlohmann::json();
        item["t_d_ns"] =
            row.t_d ? nlohmann::json(units::ns_from_s(*row.t_d)) : nlohmann::json();
        item["phonon_ok"] = row.phonon_ok;
        table.push_back(std::move(item));
    }
    sink << table.dump(2) << '\n';
}

} // namespace

std::size_t emit_table(const std::vector<SweepRow>& rows, TableFormat format,
                       std::ostream& sink) {
    if (rows.empty()) throw domain_error("refusing to emit an empty table");
    std::ostringstream buffer;
    if (format == TableFormat::csv)
        write_csv(rows, buffer);
    else
        write_json(rows, buffer);
    const std::string bytes = buffer.str();
    sink.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    sink.flush();
    if (!sink) throw io_error("table sink rejected the write");
    return bytes.size();
}

std::size_t emit_table(const std::vector<SweepRow>& rows, TableFormat format,
                       const std::string& path) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw io_error("cannot open " + path + " for writing");
    return emit_table(rows, format, file);
}

TableFormat parse_format(const std::string& name) {
    if (name == "csv") return TableFormat::csv;
    if (name == "json") return TableFormat::json;
    throw config_error("unknown table format '" + name + "' (expected csv or json)");
}

std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw io_error("cannot read config file " + path);

    std::map<std::string, std::string> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(file, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw config_error(path + ":" + std::to_string(line_no) +
                               ": expected key = value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty())
            throw config_error(path + ":" + std::to_string(line_no) +
                               ": empty key or value");
        if (!values.emplace(key, value).second)
            throw config_error(path + ":" + std::to_string(line_no) +
                               ": duplicate key '" + key + "'");
    }
    return values;
}

} // namespace qdot
