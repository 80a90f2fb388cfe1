#pragma once

#include <filesystem>
#include <iosfwd>

#include "cim/program.hpp"

namespace cim {

// Binary program image, byte-exact:
//
//   offset 0   magic "APB1" (4 bytes)
//   offset 4   u32 LE version (currently 1)
//   offset 8   u32 LE symbol_bits
//   offset 12  u32 LE num_states
//   offset 16  STE matrix: 2^W rows of ceil(N/64) u64 LE words
//   ...        routing matrix: N rows
//   ...        accept vector: 1 row
//   ...        initial active vector: 1 row
//
// Bits beyond num_states in each row are zero.
inline constexpr char kImageMagic[4] = {'A', 'P', 'B', '1'};
inline constexpr std::uint32_t kImageVersion = 1;

void save_program(const ApProgram& program, std::ostream& out);
void save_program(const ApProgram& program, const std::filesystem::path& path);

ApProgram load_program(std::istream& in);
ApProgram load_program(const std::filesystem::path& path);

}  // namespace cim
