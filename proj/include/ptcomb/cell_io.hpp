#pragma once

#include <string>

#include "ptcomb/cell.hpp"

namespace ptcomb {

/// Cell file schema (JSON):
///   {"couplings": [[r, s], ...]}
/// or
///   {"half": [[r, s], ...], "middle": r}    (middle optional, odd N)
UnitCell load_cell_json(const std::string& path);
UnitCell parse_cell_json(const std::string& text);

std::string cell_to_json(const UnitCell& cell);
void save_cell_json(const UnitCell& cell, const std::string& path);

/// Compact one-line description: [[r,s],...] for metadata comments.
std::string cell_to_string(const UnitCell& cell);

}  // namespace ptcomb
