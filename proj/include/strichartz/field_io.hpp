#pragma once

#include "strichartz/grid.hpp"

#include <string>

namespace strichartz {

/// Field as CSV rows (t, r, Re u, Im u), 17 significant digits.
void write_field_csv(const SpaceTimeField& field, const std::string& path);

/// Compact binary layout: magic "STZF", version u32, n u32, harmonic tag
/// (i32, -1 for none), nt u64, nr u64, then t-nodes, r-nodes and row-major
/// interleaved (Re, Im) pairs, all little-endian 64-bit floats.
void write_field_binary(const SpaceTimeField& field, const std::string& path);
SpaceTimeField read_field_binary(const std::string& path);

} // namespace strichartz
