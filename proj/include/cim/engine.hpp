#pragma once

#include <cstdint>
#include <optional>

#include "cim/program.hpp"

namespace cim {

// Mutable execution state for one input stream.
struct RunState {
    BitVector active;
    bool accepted_ever = false;
    std::uint64_t steps = 0;
};

struct RunOptions {
    bool trace = false;
    // When set, the initial active states are re-armed before every step, so
    // matches may begin at any stream position instead of only at the start.
    bool all_input_start = false;
};

// Per-run statistics consumed by the cost model. Every step evaluates all N
// STE columns in parallel.
struct RunStats {
    std::uint64_t steps = 0;
    std::uint32_t num_states = 0;

    std::uint64_t column_evaluations() const { return steps * num_states; }
};

struct RunResult {
    bool accepted = false;       // accepting state active after the last symbol
    bool accepted_ever = false;  // any prefix (including the empty one) accepted
    RunStats stats;
    std::vector<BitVector> trace;  // active vector per step, length steps+1 when traced
};

// Symbol Vector s: states whose symbol class contains the given symbol.
// Equals the dot product of a one-hot input vector with every STE column,
// i.e. row `symbol` of the STE matrix.
BitVector symbol_vector(const ApProgram& program, Symbol symbol);

// Follow Vector f: states reachable in one transition from the active set;
// the wired-OR of routing rows selected by the active bits.
BitVector follow_vector(const ApProgram& program, const BitVector& active);

// Accept flag A: true iff an accepting state is active.
bool accepts(const ApProgram& program, const BitVector& active);

// One processing step: new active = follow AND symbol vector.
RunState step(const ApProgram& program, const RunState& state, Symbol symbol);

// Runs a whole input stream from the program's initial active vector.
// Invalid symbols (>= 2^W) raise std::out_of_range naming the position.
RunResult run(const ApProgram& program, std::span<const Symbol> input, RunOptions options = {});
RunResult run(const ApProgram& program, std::span<const std::uint8_t> input,
              RunOptions options = {});

}  // namespace cim
