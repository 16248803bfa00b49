#pragma once

// Line-oriented text format for two-mode pure states:
//
//   fock2 cutoff=<N>
//   <m> <n> <re> <im>      one line per nonzero amplitude
//
// Blank lines and lines starting with '#' are ignored. Absent amplitudes are
// zero. Doubles are written in shortest round-trip form.

#include <filesystem>
#include <iosfwd>

#include "gaussify/fock.hpp"

namespace gaussify {

PureState2 read_state(std::istream& in);
PureState2 read_state_file(const std::filesystem::path& path);

void write_state(std::ostream& out, const PureState2& state);
void write_state_file(const std::filesystem::path& path, const PureState2& state);

}  // namespace gaussify
