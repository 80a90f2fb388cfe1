#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace cim {

using Symbol = std::uint32_t;
using StateId = std::uint32_t;

// Symbol widths are capped so the symbol matrix (2^W rows) stays allocatable.
inline constexpr std::uint32_t kMaxSymbolBits = 16;

struct Transition {
    StateId src;
    Symbol symbol;
    StateId dst;

    auto operator<=>(const Transition&) const = default;
};

// Nondeterministic finite acceptor over an integer alphabet [0, 2^W).
// States are dense ids 0..num_states-1. Epsilon transitions are not
// representable; construction front-ends must produce epsilon-free automata.
struct Nfa {
    std::uint32_t symbol_bits = 8;
    StateId num_states = 0;
    StateId start = 0;
    std::vector<Transition> transitions;
    std::vector<StateId> accepting;  // sorted, unique

    std::uint32_t num_symbols() const { return 1u << symbol_bits; }
    bool is_accepting(StateId s) const;

    // Checks the structural invariants; throws std::invalid_argument.
    void validate() const;

    // Sorts and deduplicates transitions and accepting states.
    void normalize();
};

// Reference subset simulation: the acceptance oracle every bit-parallel
// execution path in this project is tested against. Implemented with plain
// per-state flags on purpose; it must not share code with the engine.
bool nfa_accepts(const Nfa& nfa, std::span<const Symbol> input);

// Convenience for byte-encoded inputs.
std::vector<Symbol> to_symbols(std::string_view bytes);

}  // namespace cim
