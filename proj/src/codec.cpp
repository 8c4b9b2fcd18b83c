#include "vlcpolar/codec.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vlcpolar {

namespace {

double clamp_llr(double v) { return std::clamp(v, -kLlrClamp, kLlrClamp); }

std::size_t bit_reverse(std::size_t x, unsigned bits) {
    std::size_t r = 0;
    for (unsigned i = 0; i < bits; ++i) r |= ((x >> i) & 1u) << (bits - 1 - i);
    return r;
}

}  // namespace

double llr_odd(double a, double b) {
    // 2*atanh(tanh(a/2)*tanh(b/2)) rewritten as
    // ln(cosh((a+b)/2)) - ln(cosh((a-b)/2)); the literal tanh product
    // saturates to 1 in double precision once |a|,|b| pass ~19.
    const double sum = std::abs(a + b);
    const double diff = std::abs(a - b);
    const double sign = (a < 0.0) == (b < 0.0) ? 1.0 : -1.0;
    return sign * std::min(std::abs(a), std::abs(b)) + std::log1p(std::exp(-sum)) -
           std::log1p(std::exp(-diff));
}

double llr_even(double a, double b, Bit u) { return b + (u ? -a : a); }

namespace {

// Depth-first successive cancellation over the un-permuted transform. The
// block of size m keeps its soft inputs in soft[m .. 2m); both children
// reuse soft[m/2 .. m) one after the other. Hard partial sums accumulate in
// place over the coordinate range the block covers.
struct ScContext {
    const CodeSpec& spec;
    std::vector<double> soft;      // 2N
    std::vector<Bit> hard;         // N, subtree codewords in place
    std::vector<Bit> u_hat;        // N decisions
    std::vector<double>* llr_out;  // optional per-decision LLRs
    std::uint64_t kernel_evals = 0;

    explicit ScContext(const CodeSpec& s)
        : spec(s), soft(2 * s.block_length()), hard(s.block_length()),
          u_hat(s.block_length()), llr_out(nullptr) {}

    void run(std::size_t m, std::size_t first) {
        if (m == 1) {
            const double llr = soft[1];
            if (llr_out) (*llr_out)[first] = llr;
            const Bit bit = spec.is_info(first) ? hard_decision(llr) : spec.frozen_value();
            u_hat[first] = bit;
            hard[first] = bit;
            return;
        }
        const std::size_t half = m / 2;
        for (std::size_t i = 0; i < half; ++i)
            soft[half + i] = llr_odd(soft[m + i], soft[m + half + i]);
        kernel_evals += half;
        run(half, first);
        for (std::size_t i = 0; i < half; ++i)
            soft[half + i] = llr_even(soft[m + i], soft[m + half + i], hard[first + i]);
        kernel_evals += half;
        run(half, first + half);
        for (std::size_t i = 0; i < half; ++i) hard[first + i] ^= hard[first + half + i];
    }
};

}  // namespace

BitBlock encode(const CodeSpec& spec, const BitBlock& message) {
    const std::size_t n = spec.block_length();
    if (message.size() != spec.message_length())
        throw std::invalid_argument("encode: message length must equal the info set size");

    std::vector<Bit> u(n, spec.frozen_value());
    for (std::size_t j = 0; j < message.size(); ++j) u[spec.info_set()[j]] = message[j];

    // n-stage XOR butterfly computing the Kronecker-power transform.
    for (std::size_t inc = 1; inc < n; inc <<= 1)
        for (std::size_t i = 0; i < n; i += inc << 1)
            for (std::size_t j = 0; j < inc; ++j) u[i + j] ^= u[i + j + inc];

    // Bit-reversal permutation to codeword order.
    BitBlock out(n, BitRole::codeword);
    for (std::size_t i = 0; i < n; ++i) out[i] = u[bit_reverse(i, spec.stages())];
    return out;
}

BitBlock decode(const CodeSpec& spec, const LlrBlock& channel_llrs, DecodeTrace* trace) {
    const std::size_t n = spec.block_length();
    if (channel_llrs.size() != n)
        throw std::invalid_argument("decode: llr length must equal the block length");
    for (double v : channel_llrs.llrs)
        if (!std::isfinite(v)) throw std::invalid_argument("decode: llr values must be finite");

    ScContext ctx(spec);
    if (trace) {
        trace->decision_llrs.assign(n, 0.0);
        ctx.llr_out = &trace->decision_llrs;
    }
    // Undo the encoder-side bit reversal so the recursion pairs halves.
    for (std::size_t i = 0; i < n; ++i)
        ctx.soft[n + i] = clamp_llr(channel_llrs[bit_reverse(i, spec.stages())]);
    ctx.run(n, 0);

    BitBlock message(spec.message_length(), BitRole::message);
    for (std::size_t j = 0; j < message.size(); ++j)
        message[j] = ctx.u_hat[spec.info_set()[j]];
    if (trace) {
        trace->u_hat = std::move(ctx.u_hat);
        trace->kernel_evals = ctx.kernel_evals;
    }
    return message;
}

}  // namespace vlcpolar
