#include "cim/bitvector.hpp"

#include <stdexcept>

namespace cim {

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        char c = bits[i];
        if (c != '0' && c != '1')
            throw std::invalid_argument("bit string must contain only '0' and '1'");
        if (c == '1') v.set(i);
    }
    return v;
}

bool BitVector::test(std::size_t pos) const {
    if (pos >= len_) throw std::out_of_range("bit index " + std::to_string(pos) +
                                             " out of range for length " + std::to_string(len_));
    return (words_[pos / 64] >> (pos % 64)) & 1u;
}

void BitVector::set(std::size_t pos, bool value) {
    if (pos >= len_) throw std::out_of_range("bit index " + std::to_string(pos) +
                                             " out of range for length " + std::to_string(len_));
    std::uint64_t mask = std::uint64_t{1} << (pos % 64);
    if (value)
        words_[pos / 64] |= mask;
    else
        words_[pos / 64] &= ~mask;
}

void BitVector::clear() {
    std::fill(words_.begin(), words_.end(), 0);
}

bool BitVector::any() const {
    for (std::uint64_t w : words_)
        if (w != 0) return true;
    return false;
}

std::size_t BitVector::count() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

BitVector& BitVector::operator&=(const BitVector& other) {
    require_same_length(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
    require_same_length(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

bool BitVector::intersects(const BitVector& other) const {
    require_same_length(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for_each_set([&](std::size_t i) { s[i] = '1'; });
    return s;
}

void BitVector::require_same_length(const BitVector& other) const {
    if (len_ != other.len_)
        throw std::invalid_argument("bit vector length mismatch: " + std::to_string(len_) +
                                    " vs " + std::to_string(other.len_));
}

}  // namespace cim
