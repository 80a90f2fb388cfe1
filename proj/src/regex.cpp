#include "cim/regex.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <set>

#include "cim/errors.hpp"

namespace cim {
namespace {

struct Node {
    enum Kind { kEpsilon, kSyms, kConcat, kAlt, kStar, kPlus, kOpt };

    Kind kind = kEpsilon;
    std::vector<Node> children;
    std::vector<Symbol> symbols;   // kSyms: sorted symbol class
    std::size_t position = 0;      // kSyms: 1-based, assigned after parsing
};

class Parser {
public:
    Parser(std::string_view pattern, const RegexOptions& options)
        : pattern_(pattern), options_(options) {
        if (options.symbol_bits < 1 || options.symbol_bits > kMaxSymbolBits)
            throw std::invalid_argument("symbol_bits must be in [1, " +
                                        std::to_string(kMaxSymbolBits) + "]");
        num_symbols_ = 1u << options.symbol_bits;
    }

    Node parse() {
        Node n = parse_alternation();
        if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
        return n;
    }

private:
    bool at_end() const { return pos_ >= pattern_.size(); }
    char peek() const { return pattern_[pos_]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("regex syntax error: " + msg, pos_);
    }

    Node parse_alternation() {
        Node first = parse_concat();
        if (at_end() || peek() != '|') return first;
        Node alt;
        alt.kind = Node::kAlt;
        alt.children.push_back(std::move(first));
        while (!at_end() && peek() == '|') {
            ++pos_;
            alt.children.push_back(parse_concat());
        }
        return alt;
    }

    Node parse_concat() {
        Node cat;
        cat.kind = Node::kConcat;
        while (!at_end() && peek() != '|' && peek() != ')')
            cat.children.push_back(parse_postfix());
        if (cat.children.empty()) {
            cat.kind = Node::kEpsilon;
            cat.children.clear();
        } else if (cat.children.size() == 1) {
            return std::move(cat.children.front());
        }
        return cat;
    }

    Node parse_postfix() {
        Node n = parse_atom();
        while (!at_end() && (peek() == '*' || peek() == '+' || peek() == '?')) {
            Node wrapped;
            wrapped.kind = peek() == '*' ? Node::kStar : peek() == '+' ? Node::kPlus : Node::kOpt;
            wrapped.children.push_back(std::move(n));
            n = std::move(wrapped);
            ++pos_;
        }
        return n;
    }

    Node parse_atom() {
        if (at_end()) fail("expected atom");
        char c = peek();
        if (c == '(') {
            std::size_t open = pos_++;
            Node inner = parse_alternation();
            if (at_end() || peek() != ')')
                throw ParseError("regex syntax error: unclosed '('", open);
            ++pos_;
            return inner;
        }
        if (c == ')') fail("unmatched ')'");
        if (c == '[') return parse_class();
        if (c == '*' || c == '+' || c == '?') fail("quantifier with nothing to repeat");
        if (c == ']') fail("unmatched ']'");
        return make_symbol_node({read_char()});
    }

    Node parse_class() {
        std::size_t open = pos_++;  // consume '['
        bool negate = false;
        if (!at_end() && peek() == '^') {
            negate = true;
            ++pos_;
        }
        std::set<Symbol> members;
        bool saw_item = false;
        while (true) {
            if (at_end()) throw ParseError("regex syntax error: unclosed '['", open);
            if (peek() == ']' && saw_item) {
                ++pos_;
                break;
            }
            char lo = read_class_char();
            if (!at_end() && peek() == '-' && pos_ + 1 < pattern_.size() &&
                pattern_[pos_ + 1] != ']') {
                ++pos_;  // consume '-'
                std::size_t hi_pos = pos_;
                char hi = read_class_char();
                if (static_cast<unsigned char>(hi) < static_cast<unsigned char>(lo))
                    throw ParseError("regex syntax error: reversed character range", hi_pos);
                for (unsigned v = static_cast<unsigned char>(lo);
                     v <= static_cast<unsigned char>(hi); ++v)
                    members.insert(encode(static_cast<char>(v), pos_));
            } else {
                members.insert(encode(lo, pos_));
            }
            saw_item = true;
        }
        if (members.empty()) throw ParseError("regex syntax error: empty character class", open);

        std::vector<Symbol> syms;
        if (negate) {
            for (Symbol s = 0; s < num_symbols_; ++s)
                if (!members.count(s)) syms.push_back(s);
            if (syms.empty())
                throw ParseError("regex syntax error: negated class matches nothing", open);
        } else {
            syms.assign(members.begin(), members.end());
        }
        return make_symbol_node(std::move(syms));
    }

    // Reads one literal character, resolving escapes. Used outside classes.
    char read_char() {
        char c = pattern_[pos_];
        if (c != '\\') {
            ++pos_;
            return c;
        }
        return read_escape();
    }

    // Inside a class the metacharacter set differs but escapes are shared.
    char read_class_char() {
        char c = pattern_[pos_];
        if (c != '\\') {
            ++pos_;
            return c;
        }
        return read_escape();
    }

    char read_escape() {
        std::size_t at = pos_++;  // consume '\'
        if (at_end()) throw ParseError("regex syntax error: trailing backslash", at);
        char c = pattern_[pos_++];
        switch (c) {
            case 'n': return '\n';
            case 'r': return '\r';
            case 't': return '\t';
            case '0': return '\0';
            case 'x': {
                if (pos_ + 2 > pattern_.size() ||
                    !std::isxdigit(static_cast<unsigned char>(pattern_[pos_])) ||
                    !std::isxdigit(static_cast<unsigned char>(pattern_[pos_ + 1])))
                    throw ParseError("regex syntax error: \\x needs two hex digits", at);
                unsigned v = 0;
                for (int i = 0; i < 2; ++i) {
                    char h = pattern_[pos_++];
                    v = v * 16 + static_cast<unsigned>(
                                     std::isdigit(static_cast<unsigned char>(h))
                                         ? h - '0'
                                         : std::tolower(static_cast<unsigned char>(h)) - 'a' + 10);
                }
                return static_cast<char>(v);
            }
            case '\\': case '|': case '*': case '+': case '?':
            case '(': case ')': case '[': case ']': case '-': case '^': case '.':
                return c;
            default:
                throw ParseError("regex syntax error: unknown escape '\\" + std::string(1, c) + "'",
                                 at);
        }
    }

    Symbol encode(char c, std::size_t at) const {
        Symbol s;
        if (options_.literal_map) {
            auto it = options_.literal_map->find(c);
            if (it == options_.literal_map->end())
                throw ParseError("regex syntax error: literal '" + std::string(1, c) +
                                 "' not in symbol map", at);
            s = it->second;
        } else {
            s = static_cast<Symbol>(static_cast<unsigned char>(c));
        }
        if (s >= num_symbols_)
            throw ParseError("symbol " + std::to_string(s) + " out of alphabet range [0, " +
                             std::to_string(num_symbols_) + ")", at);
        return s;
    }

    Node make_symbol_node(std::vector<Symbol> syms) {
        Node n;
        n.kind = Node::kSyms;
        n.symbols = std::move(syms);
        return n;
    }

    std::string_view pattern_;
    const RegexOptions& options_;
    std::uint32_t num_symbols_;
    std::size_t pos_ = 0;
};

struct GlushkovSets {
    bool nullable = false;
    std::vector<std::size_t> first;
    std::vector<std::size_t> last;
};

void merge_into(std::vector<std::size_t>& dst, const std::vector<std::size_t>& src) {
    dst.insert(dst.end(), src.begin(), src.end());
}

// Assigns 1-based position indices to symbol leaves in reading order and
// collects their symbol classes.
void number_positions(Node& node, std::vector<std::vector<Symbol>>& classes) {
    if (node.kind == Node::kSyms) {
        classes.push_back(node.symbols);
        node.position = classes.size();
        return;
    }
    for (Node& child : node.children) number_positions(child, classes);
}

GlushkovSets analyze(const Node& node, std::vector<std::set<std::size_t>>& follow) {
    GlushkovSets out;
    switch (node.kind) {
        case Node::kEpsilon:
            out.nullable = true;
            break;
        case Node::kSyms:
            out.first = {node.position};
            out.last = {node.position};
            break;
        case Node::kConcat: {
            out.nullable = true;
            std::vector<std::size_t> open_lasts;  // lasts still reaching the frontier
            for (const Node& child : node.children) {
                GlushkovSets c = analyze(child, follow);
                for (std::size_t p : open_lasts)
                    for (std::size_t q : c.first) follow[p].insert(q);
                if (out.nullable) merge_into(out.first, c.first);
                if (c.nullable) {
                    merge_into(open_lasts, c.last);
                } else {
                    open_lasts = c.last;
                }
                out.nullable = out.nullable && c.nullable;
            }
            out.last = std::move(open_lasts);
            break;
        }
        case Node::kAlt:
            for (const Node& child : node.children) {
                GlushkovSets c = analyze(child, follow);
                out.nullable = out.nullable || c.nullable;
                merge_into(out.first, c.first);
                merge_into(out.last, c.last);
            }
            break;
        case Node::kStar:
        case Node::kPlus: {
            GlushkovSets c = analyze(node.children.front(), follow);
            for (std::size_t p : c.last)
                for (std::size_t q : c.first) follow[p].insert(q);
            out.nullable = node.kind == Node::kStar || c.nullable;
            out.first = c.first;
            out.last = c.last;
            break;
        }
        case Node::kOpt: {
            GlushkovSets c = analyze(node.children.front(), follow);
            out.nullable = true;
            out.first = c.first;
            out.last = c.last;
            break;
        }
    }
    return out;
}

}  // namespace

Nfa parse_regex(std::string_view pattern, const RegexOptions& options) {
    Parser parser(pattern, options);
    Node ast = parser.parse();

    std::vector<std::vector<Symbol>> classes;  // classes[p-1] = symbols of position p
    number_positions(ast, classes);

    std::vector<std::set<std::size_t>> follow(classes.size() + 1);
    GlushkovSets sets = analyze(ast, follow);

    Nfa nfa;
    nfa.symbol_bits = options.symbol_bits;
    nfa.num_states = static_cast<StateId>(classes.size() + 1);  // state 0 is the start
    nfa.start = 0;

    for (std::size_t p : sets.first)
        for (Symbol s : classes[p - 1])
            nfa.transitions.push_back({0, s, static_cast<StateId>(p)});
    for (std::size_t p = 1; p <= classes.size(); ++p)
        for (std::size_t q : follow[p])
            for (Symbol s : classes[q - 1])
                nfa.transitions.push_back(
                    {static_cast<StateId>(p), s, static_cast<StateId>(q)});

    for (std::size_t p : sets.last) nfa.accepting.push_back(static_cast<StateId>(p));
    if (sets.nullable) nfa.accepting.push_back(0);

    nfa.normalize();
    nfa.validate();
    return nfa;
}

Nfa parse_regex(std::string_view pattern, std::uint32_t symbol_bits) {
    RegexOptions options;
    options.symbol_bits = symbol_bits;
    return parse_regex(pattern, options);
}

}  // namespace cim
