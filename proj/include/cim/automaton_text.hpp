#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cim/nfa.hpp"

namespace cim {

// Text format, one automaton per file:
//
//   nfa W=<bits> states=<N> start=<id>
//   accept <id> <id> ...
//   trans <src> <symbol> <dst>
//
// Symbols are decimal integers. Parsing is whitespace-tolerant, '#' starts a
// comment, accept/trans lines may repeat; any other directive is an error.
Nfa parse_automaton_text(std::string_view text);
Nfa load_automaton_file(const std::filesystem::path& path);

// Canonical form: header, one sorted accept line, transitions sorted by
// (src, symbol, dst). Parsing the output reproduces the automaton exactly.
std::string write_automaton_text(const Nfa& nfa);

}  // namespace cim
