#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cim {

// Fixed-width bit vector packed into 64-bit words. Bits past size() are kept
// zero (canonical form), so whole-word operations never need tail masking.
// All binary operations require equal lengths.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t length)
        : len_(length), words_(word_count_for(length), 0) {}

    // Builds from a bit string in index order: "101" sets bits 0 and 2.
    static BitVector from_string(std::string_view bits);

    std::size_t size() const { return len_; }
    std::size_t word_count() const { return words_.size(); }

    bool test(std::size_t pos) const;
    void set(std::size_t pos, bool value = true);
    void clear();

    bool any() const;
    bool none() const { return !any(); }
    std::size_t count() const;

    BitVector& operator&=(const BitVector& other);
    BitVector& operator|=(const BitVector& other);
    friend BitVector operator&(BitVector a, const BitVector& b) { a &= b; return a; }
    friend BitVector operator|(BitVector a, const BitVector& b) { a |= b; return a; }
    bool operator==(const BitVector&) const = default;

    // any(*this & other) without materializing the intersection.
    bool intersects(const BitVector& other) const;

    // Calls fn(index) for every set bit in ascending order.
    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word != 0) {
                fn(w * 64 + static_cast<unsigned>(std::countr_zero(word)));
                word &= word - 1;
            }
        }
    }

    const std::uint64_t* words() const { return words_.data(); }
    std::uint64_t* words() { return words_.data(); }

    std::string to_string() const;

    static std::size_t word_count_for(std::size_t bits) { return (bits + 63) / 64; }

private:
    void require_same_length(const BitVector& other) const;

    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace cim
