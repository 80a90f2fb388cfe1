#pragma once

#include <span>

#include "cim/bitvector.hpp"
#include "cim/homogenize.hpp"

namespace cim {

struct CompileOptions {
    // Upper bound on program width; states map one-to-one onto bit positions.
    std::uint32_t max_states = 65536;
};

// The configured chip image of an automata processor: the STE matrix (one
// column per state, one row per input symbol), the routing matrix, the
// accept vector, and the initial active vector. Rows are stored flat so the
// execution kernels stream over contiguous words.
//
// Layout: symbol row k holds bit n iff symbol k is in state n's class;
// routing row i holds bit n iff there is an edge i -> n (row-major by source
// state, so multi-row activation is an OR of rows).
class ApProgram {
public:
    ApProgram() = default;
    ApProgram(std::uint32_t symbol_bits, std::uint32_t num_states);

    std::uint32_t symbol_bits() const { return symbol_bits_; }
    std::uint32_t num_states() const { return num_states_; }
    std::uint32_t num_symbols() const { return 1u << symbol_bits_; }
    std::size_t words_per_row() const { return words_per_row_; }

    std::span<const std::uint64_t> symbol_row(Symbol k) const;
    std::span<const std::uint64_t> route_row(StateId i) const;

    bool symbol_bit(Symbol k, StateId n) const;
    bool route_bit(StateId i, StateId n) const;
    void set_symbol_bit(Symbol k, StateId n);
    void set_route_bit(StateId i, StateId n);

    const BitVector& accept_mask() const { return accept_mask_; }
    BitVector& accept_mask() { return accept_mask_; }
    const BitVector& initial_active() const { return initial_active_; }
    BitVector& initial_active() { return initial_active_; }

    bool operator==(const ApProgram&) const = default;

private:
    std::uint32_t symbol_bits_ = 0;
    std::uint32_t num_states_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> symbol_words_;  // 2^W rows
    std::vector<std::uint64_t> route_words_;   // N rows
    BitVector accept_mask_;
    BitVector initial_active_;
};

// Maps states to STE columns in automaton order and fills the matrices.
ApProgram compile(const HomogeneousAutomaton& h, const CompileOptions& options = {});

// Reads the matrices back into an automaton; inverse of compile.
HomogeneousAutomaton decompile(const ApProgram& program);

}  // namespace cim
