#pragma once

// Brute-force references the unit and acceptance tests check the library
// against. Everything here favors literal structure over speed: the encode
// oracle multiplies dense 0/1 matrices, the reliability oracle walks the
// recursion tree node by node, and the decode oracle evaluates the
// likelihood-ratio recursion directly in the ratio domain.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "vlcpolar/construct.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<std::uint8_t>>;

inline Matrix kernel() { return {{1, 0}, {1, 1}}; }

inline Matrix kronecker(const Matrix& a, const Matrix& b) {
    const std::size_t ar = a.size(), ac = a[0].size();
    const std::size_t br = b.size(), bc = b[0].size();
    Matrix out(ar * br, std::vector<std::uint8_t>(ac * bc, 0));
    for (std::size_t i = 0; i < ar; ++i)
        for (std::size_t j = 0; j < ac; ++j)
            for (std::size_t k = 0; k < br; ++k)
                for (std::size_t l = 0; l < bc; ++l)
                    out[i * br + k][j * bc + l] = a[i][j] & b[k][l];
    return out;
}

inline std::size_t bit_reverse(std::size_t x, unsigned bits) {
    std::size_t r = 0;
    for (unsigned i = 0; i < bits; ++i) r |= ((x >> i) & 1u) << (bits - 1 - i);
    return r;
}

inline Matrix bit_reversal_matrix(unsigned stages) {
    const std::size_t n = std::size_t{1} << stages;
    Matrix out(n, std::vector<std::uint8_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) out[i][bit_reverse(i, stages)] = 1;
    return out;
}

inline Matrix matmul_mod2(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size(), m = b[0].size(), k = b.size();
    Matrix out(n, std::vector<std::uint8_t>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            unsigned acc = 0;
            for (std::size_t t = 0; t < k; ++t) acc ^= a[i][t] & b[t][j];
            out[i][j] = static_cast<std::uint8_t>(acc);
        }
    return out;
}

// B_N * F^{(x)n} built literally.
inline Matrix polar_generator(unsigned stages) {
    Matrix f = kernel();
    Matrix fn = f;
    for (unsigned s = 1; s < stages; ++s) fn = kronecker(fn, f);
    return matmul_mod2(bit_reversal_matrix(stages), fn);
}

// Row vector times matrix over GF(2).
inline std::vector<std::uint8_t> encode_dense(const Matrix& g, const std::vector<std::uint8_t>& u) {
    const std::size_t n = g.size();
    std::vector<std::uint8_t> x(g[0].size(), 0);
    for (std::size_t j = 0; j < x.size(); ++j) {
        unsigned acc = 0;
        for (std::size_t i = 0; i < n; ++i) acc ^= u[i] & g[i][j];
        x[j] = static_cast<std::uint8_t>(acc);
    }
    return x;
}

// Recursion-tree walk: the left child degrades (2z - z^2), the right child
// upgrades (z^2); a preorder walk emits leaf scores in coordinate order.
inline void reliability_walk(double z, unsigned depth, std::vector<double>& out) {
    if (depth == 0) {
        out.push_back(z);
        return;
    }
    reliability_walk(2.0 * z - z * z, depth - 1, out);
    reliability_walk(z * z, depth - 1, out);
}

inline std::vector<double> reliability_tree(unsigned stages, double z0) {
    std::vector<double> out;
    out.reserve(std::size_t{1} << stages);
    reliability_walk(z0, stages, out);
    return out;
}

// Likelihood-ratio recursion evaluated verbatim: the odd branch is
// (a*b + 1)/(a + b), the even branch a^(1-2u)*b, with the observation block
// split into halves and the past decisions into odd/even subsequences.
inline double lr_value(const std::vector<double>& chan_lr, std::size_t off, std::size_t m,
                       std::size_t i, const std::vector<std::uint8_t>& past) {
    if (m == 1) return chan_lr[off];
    const std::size_t j = i / 2;
    std::vector<std::uint8_t> left_past(j), right_past(j);
    for (std::size_t t = 0; t < j; ++t) {
        left_past[t] = static_cast<std::uint8_t>(past[2 * t] ^ past[2 * t + 1]);
        right_past[t] = past[2 * t + 1];
    }
    const double a = lr_value(chan_lr, off, m / 2, j, left_past);
    const double b = lr_value(chan_lr, off + m / 2, m / 2, j, right_past);
    if (i % 2 == 0) return (a * b + 1.0) / (a + b);
    return past[i - 1] ? b / a : a * b;
}

struct LrDecodeResult {
    std::vector<double> decision_lr;
    std::vector<std::uint8_t> u_hat;
};

// Sequential decode using lr_value for every decision; exponential in the
// block length, intended for N <= 16.
inline LrDecodeResult lr_reference_decode(const vlcpolar::CodeSpec& spec,
                                          const std::vector<double>& chan_lr) {
    const std::size_t n = spec.block_length();
    if (chan_lr.size() != n) throw std::invalid_argument("oracle: llr length mismatch");
    LrDecodeResult res;
    res.decision_lr.resize(n);
    res.u_hat.resize(n);
    std::vector<std::uint8_t> past;
    for (std::size_t i = 0; i < n; ++i) {
        const double lr = lr_value(chan_lr, 0, n, i, past);
        res.decision_lr[i] = lr;
        if (spec.is_info(i))
            res.u_hat[i] = lr < 1.0 ? 1 : 0;
        else
            res.u_hat[i] = spec.frozen_value();
        past.push_back(res.u_hat[i]);
    }
    return res;
}

}  // namespace oracle
