// io.hpp - deterministic text serialization (17 significant digits, C locale)
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "rhzeta/design.hpp"
#include "rhzeta/synthesis.hpp"

namespace rhz::io {

/// Shortest-independent fixed form: %.17g semantics via std::to_chars.
std::string format_real(double v);

/// Locale-independent; throws InvalidParameter on trailing garbage.
double parse_real(std::string_view text);

/// Columns: index,B,J_next (J_next empty on the last row).
void write_tridiagonal_csv(std::ostream& os, const SymmetricTridiagonal& tri);
void write_tridiagonal_json(std::ostream& os, const SymmetricTridiagonal& tri);

/// Reads the CSV produced by write_tridiagonal_csv. Lines starting with '#'
/// are comments.
SymmetricTridiagonal read_tridiagonal_csv(std::istream& is);

/// Columns: index,J,B (J empty on the last row).
void write_spin_chain_csv(std::ostream& os, const SpinChainParams& spin);

/// {"fabrication": {...}, "energy_offset": ..., "guides": [{index,x,y,detuning}],
///  "bonds": [{index,d,theta,J}]}
void write_waveguide_json(std::ostream& os, const WaveguideDesign& design);

}  // namespace rhz::io
