#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cim {

// Syntax error in a regex pattern or an automaton/config text file.
// `position` is a character offset for patterns and a 1-based line number
// for line-oriented files.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace cim
