#include "cim/image.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace cim {
namespace {

void put_u32(std::ostream& out, std::uint32_t v) {
    std::array<char, 4> b;
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b.data(), b.size());
}

void put_u64(std::ostream& out, std::uint64_t v) {
    std::array<char, 8> b;
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b.data(), b.size());
}

std::uint32_t get_u32(std::istream& in) {
    std::array<unsigned char, 4> b;
    in.read(reinterpret_cast<char*>(b.data()), b.size());
    if (!in) throw std::runtime_error("program image truncated");
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t{b[i]} << (8 * i);
    return v;
}

std::uint64_t get_u64(std::istream& in) {
    std::array<unsigned char, 8> b;
    in.read(reinterpret_cast<char*>(b.data()), b.size());
    if (!in) throw std::runtime_error("program image truncated");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t{b[i]} << (8 * i);
    return v;
}

void put_row(std::ostream& out, std::span<const std::uint64_t> row) {
    for (std::uint64_t w : row) put_u64(out, w);
}

void put_row(std::ostream& out, const BitVector& row) {
    for (std::size_t w = 0; w < row.word_count(); ++w) put_u64(out, row.words()[w]);
}

}  // namespace

void save_program(const ApProgram& program, std::ostream& out) {
    out.write(kImageMagic, sizeof(kImageMagic));
    put_u32(out, kImageVersion);
    put_u32(out, program.symbol_bits());
    put_u32(out, program.num_states());
    for (Symbol k = 0; k < program.num_symbols(); ++k) put_row(out, program.symbol_row(k));
    for (StateId i = 0; i < program.num_states(); ++i) put_row(out, program.route_row(i));
    put_row(out, program.accept_mask());
    put_row(out, program.initial_active());
    if (!out) throw std::runtime_error("failed to write program image");
}

void save_program(const ApProgram& program, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path.string());
    save_program(program, out);
}

ApProgram load_program(std::istream& in) {
    char magic[4];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kImageMagic, sizeof(magic)) != 0)
        throw std::runtime_error("not a program image (bad magic)");
    std::uint32_t version = get_u32(in);
    if (version != kImageVersion)
        throw std::runtime_error("unsupported program image version " + std::to_string(version));
    std::uint32_t symbol_bits = get_u32(in);
    std::uint32_t num_states = get_u32(in);
    if (symbol_bits < 1 || symbol_bits > kMaxSymbolBits || num_states == 0)
        throw std::runtime_error("program image header out of range");

    ApProgram p(symbol_bits, num_states);
    auto read_bits = [&](auto&& sink) {
        for (std::size_t w = 0; w < p.words_per_row(); ++w) {
            std::uint64_t word = get_u64(in);
            for (unsigned b = 0; b < 64; ++b) {
                std::size_t n = w * 64 + b;
                if (word >> b & 1u) {
                    if (n >= num_states)
                        throw std::runtime_error("program image has bits past row width");
                    sink(static_cast<StateId>(n));
                }
            }
        }
    };
    for (Symbol k = 0; k < p.num_symbols(); ++k)
        read_bits([&](StateId n) { p.set_symbol_bit(k, n); });
    for (StateId i = 0; i < num_states; ++i)
        read_bits([&](StateId n) { p.set_route_bit(i, n); });
    read_bits([&](StateId n) { p.accept_mask().set(n); });
    read_bits([&](StateId n) { p.initial_active().set(n); });

    in.peek();
    if (!in.eof()) throw std::runtime_error("trailing bytes after program image");
    return p;
}

ApProgram load_program(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open program image: " + path.string());
    return load_program(in);
}

}  // namespace cim
