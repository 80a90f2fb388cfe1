#pragma once

#include <utility>
#include <vector>

#include "cim/nfa.hpp"

namespace cim {

// Automaton whose input symbols are a property of states rather than
// transitions: a state can only be entered on the symbols in its class, so
// edges carry no labels. This is the form automata processors execute.
struct HomogeneousAutomaton {
    std::uint32_t symbol_bits = 8;
    std::vector<std::vector<Symbol>> symbol_classes;     // per state, sorted
    std::vector<std::pair<StateId, StateId>> edges;      // sorted, unique
    std::vector<StateId> start_states;                   // sorted; active at step 0
    std::vector<StateId> accepting;                      // sorted

    StateId num_states() const { return static_cast<StateId>(symbol_classes.size()); }
    std::uint32_t num_symbols() const { return 1u << symbol_bits; }
    bool is_accepting(StateId s) const;

    void validate() const;
};

// Translates an NFA into a language-equivalent homogeneous automaton.
//
// Each NFA state is split by its incoming-symbol partition: symbols carried
// by incoming transitions are grouped by identical predecessor sets, and one
// homogeneous state is created per group (states whose incoming transitions
// already share one symbol set are not split). A dedicated start state with
// an empty symbol class holds the initial activation; it can never be
// re-entered, mirroring the fact that initial activation is not tied to any
// input symbol. State order: the start, then copies ordered by (source
// state, smallest class symbol).
HomogeneousAutomaton homogenize(const Nfa& nfa);

// Subset simulation over the homogeneous form. Like nfa_accepts this is an
// oracle-grade implementation, independent of the bit-parallel engine.
bool homogeneous_accepts(const HomogeneousAutomaton& h, std::span<const Symbol> input);

}  // namespace cim
