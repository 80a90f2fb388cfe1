#include "cim/engine.hpp"

#include <stdexcept>
#include <string>

namespace cim {
namespace {

void require_width(const ApProgram& program, const BitVector& active) {
    if (active.size() != program.num_states())
        throw std::invalid_argument("active vector length " + std::to_string(active.size()) +
                                    " does not match program width " +
                                    std::to_string(program.num_states()));
}

inline bool intersects_row(std::span<const std::uint64_t> row, const BitVector& mask) {
    for (std::size_t w = 0; w < row.size(); ++w)
        if (row[w] & mask.words()[w]) return true;
    return false;
}

}  // namespace

BitVector symbol_vector(const ApProgram& program, Symbol symbol) {
    auto row = program.symbol_row(symbol);
    BitVector s(program.num_states());
    for (std::size_t w = 0; w < row.size(); ++w) s.words()[w] = row[w];
    return s;
}

BitVector follow_vector(const ApProgram& program, const BitVector& active) {
    require_width(program, active);
    BitVector f(program.num_states());
    active.for_each_set([&](std::size_t i) {
        auto row = program.route_row(static_cast<StateId>(i));
        for (std::size_t w = 0; w < row.size(); ++w) f.words()[w] |= row[w];
    });
    return f;
}

bool accepts(const ApProgram& program, const BitVector& active) {
    require_width(program, active);
    return active.intersects(program.accept_mask());
}

RunState step(const ApProgram& program, const RunState& state, Symbol symbol) {
    require_width(program, state.active);
    BitVector next = follow_vector(program, state.active);
    next &= symbol_vector(program, symbol);

    RunState out;
    out.accepted_ever = state.accepted_ever || accepts(program, next);
    out.steps = state.steps + 1;
    out.active = std::move(next);
    return out;
}

namespace {

template <typename Sym>
RunResult run_impl(const ApProgram& program, std::span<const Sym> input, RunOptions options) {
    const std::size_t words = program.words_per_row();
    const std::uint32_t num_symbols = program.num_symbols();

    BitVector active = program.initial_active();
    BitVector follow(program.num_states());

    RunResult result;
    result.stats.num_states = program.num_states();
    result.accepted_ever = active.intersects(program.accept_mask());
    if (options.trace) {
        result.trace.reserve(input.size() + 1);
        result.trace.push_back(active);
    }

    for (std::size_t pos = 0; pos < input.size(); ++pos) {
        const Symbol sym = static_cast<Symbol>(input[pos]);
        if (sym >= num_symbols)
            throw std::out_of_range("invalid symbol " + std::to_string(sym) +
                                    " at input position " + std::to_string(pos) +
                                    " (alphabet is [0, " + std::to_string(num_symbols) + "))");

        if (options.all_input_start) active |= program.initial_active();

        std::uint64_t* fw = follow.words();
        for (std::size_t w = 0; w < words; ++w) fw[w] = 0;
        active.for_each_set([&](std::size_t i) {
            auto row = program.route_row(static_cast<StateId>(i));
            for (std::size_t w = 0; w < words; ++w) fw[w] |= row[w];
        });

        auto srow = program.symbol_row(sym);
        std::uint64_t* aw = active.words();
        for (std::size_t w = 0; w < words; ++w) aw[w] = fw[w] & srow[w];

        result.accepted_ever =
            result.accepted_ever || intersects_row({aw, words}, program.accept_mask());
        ++result.stats.steps;
        if (options.trace) result.trace.push_back(active);
    }

    result.accepted = active.intersects(program.accept_mask());
    result.accepted_ever = result.accepted_ever || result.accepted;
    return result;
}

}  // namespace

RunResult run(const ApProgram& program, std::span<const Symbol> input, RunOptions options) {
    return run_impl<Symbol>(program, input, options);
}

RunResult run(const ApProgram& program, std::span<const std::uint8_t> input, RunOptions options) {
    return run_impl<std::uint8_t>(program, input, options);
}

}  // namespace cim
