#ifndef QDOT_TABLE_IO_HPP
#define QDOT_TABLE_IO_HPP

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "qdot/sweep.hpp"

namespace qdot {

enum class TableFormat { csv, json };

/// Column header shared by every emitted table.
inline constexpr const char* table_header =
    "bl,x,delta_e_meV,d_enm,D_nm,v_dd_meV,t_d_ns,phonon_ok";

/// Writes rows in the fixed schema with 12 significant digits.  Missing
/// optionals become empty CSV cells or JSON nulls.  Throws domain_error on
/// an empty table and io_error when the sink cannot take the bytes.
std::size_t emit_table(const std::vector<SweepRow>& rows, TableFormat format,
                       std::ostream& sink);

/// Same, into a file.  Returns the byte count written.
std::size_t emit_table(const std::vector<SweepRow>& rows, TableFormat format,
                       const std::string& path);

TableFormat parse_format(const std::string& name);

/// Reads `key = value` lines; '#' starts a comment, blank lines are skipped.
/// Throws io_error when the file cannot be read and config_error on a
/// malformed line or duplicate key.
std::map<std::string, std::string> read_config(const std::string& path);

} // namespace qdot

#endif
