#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vlcpolar {

using Bit = std::uint8_t;

enum class BitRole { message, codeword, frame };

// Ordered bit sequence. The role tag is informational only; equality looks at
// the bits.
struct BitBlock {
    std::vector<Bit> bits;
    BitRole role = BitRole::message;

    BitBlock() = default;
    explicit BitBlock(std::size_t n, BitRole r = BitRole::message) : bits(n, 0), role(r) {}
    BitBlock(std::vector<Bit> b, BitRole r = BitRole::message) : bits(std::move(b)), role(r) {}
    BitBlock(std::initializer_list<Bit> b) : bits(b) {}

    std::size_t size() const { return bits.size(); }
    Bit& operator[](std::size_t i) { return bits[i]; }
    Bit operator[](std::size_t i) const { return bits[i]; }

    // Number of one-bits.
    std::size_t weight() const;

    friend bool operator==(const BitBlock& a, const BitBlock& b) { return a.bits == b.bits; }
    friend bool operator!=(const BitBlock& a, const BitBlock& b) { return !(a == b); }
};

// Soft values, one per bit position, log(P(bit=0)/P(bit=1)). Positive means
// bit 0 is more likely.
struct LlrBlock {
    std::vector<double> llrs;

    LlrBlock() = default;
    explicit LlrBlock(std::size_t n) : llrs(n, 0.0) {}
    explicit LlrBlock(std::vector<double> v) : llrs(std::move(v)) {}

    std::size_t size() const { return llrs.size(); }
    double& operator[](std::size_t i) { return llrs[i]; }
    double operator[](std::size_t i) const { return llrs[i]; }
};

// Packed hex text for fixtures; bit 0 of the block is the most significant
// bit of the first digit. Trailing pad bits of the last digit are zero.
std::string to_hex(const BitBlock& block);
BitBlock from_hex(std::string_view hex, std::size_t n_bits, BitRole role = BitRole::message);

}  // namespace vlcpolar
