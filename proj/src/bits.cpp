#include "vlcpolar/bits.hpp"

#include <algorithm>
#include <stdexcept>

namespace vlcpolar {

std::size_t BitBlock::weight() const {
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), Bit{1}));
}

std::string to_hex(const BitBlock& block) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve((block.size() + 3) / 4);
    for (std::size_t i = 0; i < block.size(); i += 4) {
        unsigned nibble = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            nibble <<= 1;
            if (i + j < block.size() && block[i + j]) nibble |= 1u;
        }
        out.push_back(digits[nibble]);
    }
    return out;
}

BitBlock from_hex(std::string_view hex, std::size_t n_bits, BitRole role) {
    const std::size_t want = (n_bits + 3) / 4;
    if (hex.size() != want)
        throw std::invalid_argument("from_hex: expected " + std::to_string(want) +
                                    " digits for " + std::to_string(n_bits) + " bits");
    BitBlock out(n_bits, role);
    for (std::size_t d = 0; d < hex.size(); ++d) {
        const char c = hex[d];
        unsigned nibble;
        if (c >= '0' && c <= '9')
            nibble = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f')
            nibble = static_cast<unsigned>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F')
            nibble = static_cast<unsigned>(c - 'A' + 10);
        else
            throw std::invalid_argument("from_hex: bad digit");
        for (std::size_t j = 0; j < 4; ++j) {
            const Bit bit = static_cast<Bit>((nibble >> (3 - j)) & 1u);
            const std::size_t pos = 4 * d + j;
            if (pos < n_bits)
                out[pos] = bit;
            else if (bit)
                throw std::invalid_argument("from_hex: nonzero pad bits");
        }
    }
    return out;
}

}  // namespace vlcpolar
