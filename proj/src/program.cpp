#include "cim/program.hpp"

#include <stdexcept>
#include <string>

namespace cim {

ApProgram::ApProgram(std::uint32_t symbol_bits, std::uint32_t num_states)
    : symbol_bits_(symbol_bits),
      num_states_(num_states),
      words_per_row_(BitVector::word_count_for(num_states)),
      symbol_words_((std::size_t{1} << symbol_bits) * words_per_row_, 0),
      route_words_(std::size_t{num_states} * words_per_row_, 0),
      accept_mask_(num_states),
      initial_active_(num_states) {
    if (symbol_bits < 1 || symbol_bits > kMaxSymbolBits)
        throw std::invalid_argument("symbol_bits must be in [1, " +
                                    std::to_string(kMaxSymbolBits) + "]");
    if (num_states == 0) throw std::invalid_argument("program must have at least one state");
}

std::span<const std::uint64_t> ApProgram::symbol_row(Symbol k) const {
    if (k >= num_symbols())
        throw std::out_of_range("symbol " + std::to_string(k) + " out of alphabet range [0, " +
                                std::to_string(num_symbols()) + ")");
    return {symbol_words_.data() + k * words_per_row_, words_per_row_};
}

std::span<const std::uint64_t> ApProgram::route_row(StateId i) const {
    if (i >= num_states_)
        throw std::out_of_range("state " + std::to_string(i) + " out of range");
    return {route_words_.data() + i * words_per_row_, words_per_row_};
}

bool ApProgram::symbol_bit(Symbol k, StateId n) const {
    return (symbol_row(k)[n / 64] >> (n % 64)) & 1u;
}

bool ApProgram::route_bit(StateId i, StateId n) const {
    return (route_row(i)[n / 64] >> (n % 64)) & 1u;
}

void ApProgram::set_symbol_bit(Symbol k, StateId n) {
    symbol_row(k);  // range-check k
    if (n >= num_states_) throw std::out_of_range("state bit out of range");
    symbol_words_[k * words_per_row_ + n / 64] |= std::uint64_t{1} << (n % 64);
}

void ApProgram::set_route_bit(StateId i, StateId n) {
    route_row(i);  // range-check i
    if (n >= num_states_) throw std::out_of_range("state bit out of range");
    route_words_[i * words_per_row_ + n / 64] |= std::uint64_t{1} << (n % 64);
}

ApProgram compile(const HomogeneousAutomaton& h, const CompileOptions& options) {
    h.validate();
    if (h.num_states() > options.max_states)
        throw std::invalid_argument("automaton has " + std::to_string(h.num_states()) +
                                    " states, exceeding the configured maximum of " +
                                    std::to_string(options.max_states));

    ApProgram p(h.symbol_bits, h.num_states());
    for (StateId n = 0; n < h.num_states(); ++n)
        for (Symbol s : h.symbol_classes[n]) p.set_symbol_bit(s, n);
    for (auto [src, dst] : h.edges) p.set_route_bit(src, dst);
    for (StateId s : h.accepting) p.accept_mask().set(s);
    for (StateId s : h.start_states) p.initial_active().set(s);
    return p;
}

HomogeneousAutomaton decompile(const ApProgram& program) {
    HomogeneousAutomaton h;
    h.symbol_bits = program.symbol_bits();
    h.symbol_classes.resize(program.num_states());
    for (Symbol k = 0; k < program.num_symbols(); ++k)
        for (StateId n = 0; n < program.num_states(); ++n)
            if (program.symbol_bit(k, n)) h.symbol_classes[n].push_back(k);
    for (StateId i = 0; i < program.num_states(); ++i)
        for (StateId n = 0; n < program.num_states(); ++n)
            if (program.route_bit(i, n)) h.edges.push_back({i, n});
    program.accept_mask().for_each_set(
        [&](std::size_t n) { h.accepting.push_back(static_cast<StateId>(n)); });
    program.initial_active().for_each_set(
        [&](std::size_t n) { h.start_states.push_back(static_cast<StateId>(n)); });
    return h;
}

}  // namespace cim
