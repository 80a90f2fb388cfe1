#include "cim/homogenize.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace cim {

bool HomogeneousAutomaton::is_accepting(StateId s) const {
    return std::binary_search(accepting.begin(), accepting.end(), s);
}

void HomogeneousAutomaton::validate() const {
    if (symbol_bits < 1 || symbol_bits > kMaxSymbolBits)
        throw std::invalid_argument("symbol_bits must be in [1, " +
                                    std::to_string(kMaxSymbolBits) + "]");
    if (num_states() == 0)
        throw std::invalid_argument("automaton must have at least one state");
    for (const auto& cls : symbol_classes) {
        if (!std::is_sorted(cls.begin(), cls.end()))
            throw std::invalid_argument("symbol classes must be sorted");
        for (Symbol s : cls)
            if (s >= num_symbols())
                throw std::invalid_argument("class symbol " + std::to_string(s) +
                                            " out of alphabet range");
    }
    for (auto [src, dst] : edges)
        if (src >= num_states() || dst >= num_states())
            throw std::invalid_argument("edge endpoint out of range");
    if (start_states.empty())
        throw std::invalid_argument("automaton must have at least one start state");
    for (StateId s : start_states)
        if (s >= num_states())
            throw std::invalid_argument("start state out of range");
    for (StateId s : accepting)
        if (s >= num_states())
            throw std::invalid_argument("accepting state out of range");
}

HomogeneousAutomaton homogenize(const Nfa& nfa) {
    nfa.validate();

    // Group each state's incoming symbols by identical predecessor sets.
    // incoming[q]: symbol -> set of predecessors reaching q on that symbol.
    std::vector<std::map<Symbol, std::set<StateId>>> incoming(nfa.num_states);
    for (const Transition& t : nfa.transitions) incoming[t.dst][t.symbol].insert(t.src);

    struct Copy {
        std::vector<Symbol> symbol_class;
        std::set<StateId> predecessors;
    };
    std::vector<std::vector<Copy>> copies(nfa.num_states);
    // copy_for[q][symbol] = index into copies[q] of the copy entered on `symbol`.
    std::vector<std::map<Symbol, std::size_t>> copy_for(nfa.num_states);

    for (StateId q = 0; q < nfa.num_states; ++q) {
        std::map<std::set<StateId>, std::vector<Symbol>> groups;
        for (const auto& [symbol, preds] : incoming[q]) groups[preds].push_back(symbol);
        for (auto& [preds, symbols] : groups) {
            std::sort(symbols.begin(), symbols.end());
            copies[q].push_back({symbols, preds});
        }
        // Deterministic order: by smallest symbol of the class.
        std::sort(copies[q].begin(), copies[q].end(),
                  [](const Copy& a, const Copy& b) {
                      return a.symbol_class.front() < b.symbol_class.front();
                  });
        for (std::size_t i = 0; i < copies[q].size(); ++i)
            for (Symbol s : copies[q][i].symbol_class) copy_for[q][s] = i;
    }

    HomogeneousAutomaton h;
    h.symbol_bits = nfa.symbol_bits;

    // State 0 is the dedicated start; copies follow in (state, class) order.
    std::vector<std::vector<StateId>> copy_ids(nfa.num_states);
    h.symbol_classes.push_back({});
    for (StateId q = 0; q < nfa.num_states; ++q)
        for (const Copy& c : copies[q]) {
            copy_ids[q].push_back(h.num_states());
            h.symbol_classes.push_back(c.symbol_class);
        }
    h.start_states = {0};

    std::set<std::pair<StateId, StateId>> edges;
    for (const Transition& t : nfa.transitions) {
        StateId target = copy_ids[t.dst][copy_for[t.dst].at(t.symbol)];
        // Every copy of the source state carries the source's outgoing
        // behavior; the dedicated start carries the NFA start's.
        for (StateId src_copy : copy_ids[t.src]) edges.insert({src_copy, target});
        if (t.src == nfa.start) edges.insert({0, target});
    }
    h.edges.assign(edges.begin(), edges.end());

    std::set<StateId> accepting;
    if (nfa.is_accepting(nfa.start)) accepting.insert(0);
    for (StateId q : nfa.accepting)
        for (StateId id : copy_ids[q]) accepting.insert(id);
    h.accepting.assign(accepting.begin(), accepting.end());

    h.validate();
    return h;
}

bool homogeneous_accepts(const HomogeneousAutomaton& h, std::span<const Symbol> input) {
    for (Symbol s : input)
        if (s >= h.num_symbols())
            throw std::out_of_range("input symbol " + std::to_string(s) +
                                    " out of alphabet range");

    std::set<StateId> active(h.start_states.begin(), h.start_states.end());
    for (Symbol s : input) {
        std::set<StateId> next;
        for (auto [src, dst] : h.edges) {
            if (!active.count(src)) continue;
            const auto& cls = h.symbol_classes[dst];
            if (std::binary_search(cls.begin(), cls.end(), s)) next.insert(dst);
        }
        active.swap(next);
    }
    for (StateId s : h.accepting)
        if (active.count(s)) return true;
    return false;
}

}  // namespace cim
