#pragma once

#include <map>
#include <string_view>

#include "cim/nfa.hpp"

namespace cim {

// Optional literal encoding for narrow alphabets. When present, every
// literal character in the pattern must have an entry; symbol values must
// lie below 2^W. Without a map, literals encode to their byte values.
using SymbolMap = std::map<char, Symbol>;

struct RegexOptions {
    std::uint32_t symbol_bits = 8;
    const SymbolMap* literal_map = nullptr;
};

// Builds a position (Glushkov) automaton for the pattern. Dialect: literals,
// character classes [..] with ranges and ^ negation, concatenation,
// alternation |, *, +, ?, grouping (), and escapes (\\, \n, \r, \t, \0,
// \xHH, and \<metachar>). The result is epsilon-free; every state except the
// start is entered only on its own fixed symbol class.
Nfa parse_regex(std::string_view pattern, std::uint32_t symbol_bits);
Nfa parse_regex(std::string_view pattern, const RegexOptions& options);

}  // namespace cim
