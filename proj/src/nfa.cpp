#include "cim/nfa.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cim {

bool Nfa::is_accepting(StateId s) const {
    return std::binary_search(accepting.begin(), accepting.end(), s);
}

void Nfa::validate() const {
    if (symbol_bits < 1 || symbol_bits > kMaxSymbolBits)
        throw std::invalid_argument("symbol_bits must be in [1, " +
                                    std::to_string(kMaxSymbolBits) + "]");
    if (num_states == 0)
        throw std::invalid_argument("automaton must have at least one state");
    if (start >= num_states)
        throw std::invalid_argument("start state " + std::to_string(start) + " out of range");
    for (const Transition& t : transitions) {
        if (t.src >= num_states || t.dst >= num_states)
            throw std::invalid_argument("transition endpoint out of range: " +
                                        std::to_string(t.src) + " -> " + std::to_string(t.dst));
        if (t.symbol >= num_symbols())
            throw std::invalid_argument("transition symbol " + std::to_string(t.symbol) +
                                        " out of alphabet range [0, " +
                                        std::to_string(num_symbols()) + ")");
    }
    for (StateId s : accepting)
        if (s >= num_states)
            throw std::invalid_argument("accepting state " + std::to_string(s) + " out of range");
    if (!std::is_sorted(accepting.begin(), accepting.end()))
        throw std::invalid_argument("accepting states must be sorted");
}

void Nfa::normalize() {
    std::sort(transitions.begin(), transitions.end());
    transitions.erase(std::unique(transitions.begin(), transitions.end()), transitions.end());
    std::sort(accepting.begin(), accepting.end());
    accepting.erase(std::unique(accepting.begin(), accepting.end()), accepting.end());
}

bool nfa_accepts(const Nfa& nfa, std::span<const Symbol> input) {
    for (Symbol s : input)
        if (s >= nfa.num_symbols())
            throw std::out_of_range("input symbol " + std::to_string(s) +
                                    " out of alphabet range [0, " +
                                    std::to_string(nfa.num_symbols()) + ")");

    std::vector<char> active(nfa.num_states, 0);
    std::vector<char> next(nfa.num_states, 0);
    active[nfa.start] = 1;

    for (Symbol s : input) {
        std::fill(next.begin(), next.end(), 0);
        for (const Transition& t : nfa.transitions)
            if (t.symbol == s && active[t.src]) next[t.dst] = 1;
        active.swap(next);
    }

    for (StateId s : nfa.accepting)
        if (active[s]) return true;
    return false;
}

std::vector<Symbol> to_symbols(std::string_view bytes) {
    std::vector<Symbol> out;
    out.reserve(bytes.size());
    for (unsigned char c : bytes) out.push_back(static_cast<Symbol>(c));
    return out;
}

}  // namespace cim
