#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dj {

// Every engine is O(2^n) or worse; 24 query bits keeps the worst case in RAM.
inline constexpr unsigned kMaxWidth = 24;

inline void check_width(unsigned n) {
    if (n < 1 || n > kMaxWidth)
        throw std::invalid_argument("bit width must be in [1, " + std::to_string(kMaxWidth) +
                                    "], got " + std::to_string(n));
}

/// An n-bit string identified with its numeric value. Bit address 0 is the
/// least significant bit, so bit j of value carries x_j in x_{n-1}...x_1x_0.
class BitString {
public:
    BitString(unsigned width, std::uint64_t value) : n_(width), value_(value) {
        check_width(width);
        if (value >= domain_size())
            throw std::out_of_range("value " + std::to_string(value) + " does not fit in " +
                                    std::to_string(width) + " bits");
    }

    /// Builds the string from its bit list, position 0 first.
    static BitString from_bits(std::span<const int> bits) {
        check_width(static_cast<unsigned>(bits.size()));
        std::uint64_t v = 0;
        for (std::size_t j = 0; j < bits.size(); ++j)
            if (bits[j]) v |= std::uint64_t{1} << j;
        return BitString(static_cast<unsigned>(bits.size()), v);
    }

    static BitString from_bits(std::initializer_list<int> bits) {
        return from_bits(std::span<const int>(bits.begin(), bits.size()));
    }

    unsigned width() const { return n_; }
    std::uint64_t value() const { return value_; }

    /// Number of n-bit strings, 2^n.
    std::uint64_t domain_size() const { return std::uint64_t{1} << n_; }

    int bit(unsigned j) const {
        check_address(j);
        return static_cast<int>((value_ >> j) & 1u);
    }

    /// Copy with bit j set to b; *this is unchanged.
    BitString with_bit(unsigned j, int b) const {
        check_address(j);
        std::uint64_t mask = std::uint64_t{1} << j;
        return BitString(n_, b ? (value_ | mask) : (value_ & ~mask));
    }

    /// Bit list, position 0 first (the inverse of from_bits).
    std::vector<int> bits() const {
        std::vector<int> out(n_);
        for (unsigned j = 0; j < n_; ++j) out[j] = bit(j);
        return out;
    }

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    void check_address(unsigned j) const {
        if (j >= n_)
            throw std::out_of_range("bit address " + std::to_string(j) + " out of range for width " +
                                    std::to_string(n_));
    }

    unsigned n_;
    std::uint64_t value_;
};

/// Boolean inner product: parity of the population count of the bitwise AND.
inline int dot(const BitString& x, const BitString& z) {
    if (x.width() != z.width())
        throw std::invalid_argument("boolean inner product needs equal widths, got " +
                                    std::to_string(x.width()) + " and " + std::to_string(z.width()));
    return static_cast<int>(std::popcount(x.value() & z.value()) & 1u);
}

/// Same product on raw values; callers guarantee both fit the same width.
inline int dot_raw(std::uint64_t x, std::uint64_t z) {
    return static_cast<int>(std::popcount(x & z) & 1u);
}

}  // namespace dj
