#include "cim/automaton_text.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "cim/errors.hpp"

namespace cim {
namespace {

std::uint64_t parse_number(const std::string& token, std::size_t line_no) {
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
        value = std::stoull(token, &used);
    } catch (const std::exception&) {
        throw ParseError("expected a number, got '" + token + "'", line_no);
    }
    if (used != token.size())
        throw ParseError("expected a number, got '" + token + "'", line_no);
    return value;
}

// Accepts "key=value" and returns value; key order in the header is free.
std::uint64_t header_field(std::map<std::string, std::string>& fields, const std::string& key,
                           std::size_t line_no) {
    auto it = fields.find(key);
    if (it == fields.end())
        throw ParseError("header missing '" + key + "='", line_no);
    std::uint64_t v = parse_number(it->second, line_no);
    fields.erase(it);
    return v;
}

}  // namespace

Nfa parse_automaton_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    Nfa nfa;

    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string directive;
        if (!(ls >> directive)) continue;  // blank or comment-only line

        if (!have_header) {
            if (directive != "nfa")
                throw ParseError("expected 'nfa' header, got '" + directive + "'", line_no);
            std::map<std::string, std::string> fields;
            std::string token;
            while (ls >> token) {
                auto eq = token.find('=');
                if (eq == std::string::npos || eq == 0)
                    throw ParseError("malformed header token '" + token + "'", line_no);
                fields[token.substr(0, eq)] = token.substr(eq + 1);
            }
            nfa.symbol_bits = static_cast<std::uint32_t>(header_field(fields, "W", line_no));
            nfa.num_states = static_cast<StateId>(header_field(fields, "states", line_no));
            nfa.start = static_cast<StateId>(header_field(fields, "start", line_no));
            if (!fields.empty())
                throw ParseError("unknown header field '" + fields.begin()->first + "'", line_no);
            have_header = true;
            continue;
        }

        if (directive == "accept") {
            std::string token;
            while (ls >> token)
                nfa.accepting.push_back(static_cast<StateId>(parse_number(token, line_no)));
        } else if (directive == "trans") {
            std::string a, b, c, extra;
            if (!(ls >> a >> b >> c))
                throw ParseError("trans needs <src> <symbol> <dst>", line_no);
            if (ls >> extra)
                throw ParseError("trailing token '" + extra + "' after trans", line_no);
            nfa.transitions.push_back({static_cast<StateId>(parse_number(a, line_no)),
                                       static_cast<Symbol>(parse_number(b, line_no)),
                                       static_cast<StateId>(parse_number(c, line_no))});
        } else {
            throw ParseError("unknown directive '" + directive + "'", line_no);
        }
    }

    if (!have_header) throw ParseError("missing 'nfa' header", line_no);
    nfa.normalize();
    try {
        nfa.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no);
    }
    return nfa;
}

Nfa load_automaton_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open automaton file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_automaton_text(buf.str());
}

std::string write_automaton_text(const Nfa& nfa) {
    Nfa sorted = nfa;
    sorted.normalize();
    std::ostringstream out;
    out << "nfa W=" << sorted.symbol_bits << " states=" << sorted.num_states
        << " start=" << sorted.start << "\n";
    if (!sorted.accepting.empty()) {
        out << "accept";
        for (StateId s : sorted.accepting) out << ' ' << s;
        out << "\n";
    }
    for (const Transition& t : sorted.transitions)
        out << "trans " << t.src << ' ' << t.symbol << ' ' << t.dst << "\n";
    return out.str();
}

}  // namespace cim
