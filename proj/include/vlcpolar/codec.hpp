#pragma once

#include <cstdint>
#include <vector>

#include "vlcpolar/bits.hpp"
#include "vlcpolar/construct.hpp"

namespace vlcpolar {

// Soft values are clamped to this magnitude at the channel/decoder boundary.
// Internal combinations run unclamped; bounded inputs keep them finite.
inline constexpr double kLlrClamp = 40.0;

// llr > 0 -> 0, llr < 0 -> 1, llr == 0 -> 0.
inline Bit hard_decision(double llr) { return llr < 0.0 ? Bit{1} : Bit{0}; }

// Exact check-node combination 2*atanh(tanh(a/2)*tanh(b/2)), evaluated in a
// form that stays finite at the clamp boundary.
double llr_odd(double a, double b);

// Bit-node combination b + (1-2u)*a.
double llr_even(double a, double b, Bit u);

// Codeword = message scattered over the info set, frozen coordinates at
// frozen_value, then the n-stage XOR butterfly and the bit-reversal
// permutation. O(N log N).
BitBlock encode(const CodeSpec& spec, const BitBlock& message);

// Optional decode instrumentation.
struct DecodeTrace {
    std::vector<double> decision_llrs;  // per-coordinate LLR at decision time
    std::vector<Bit> u_hat;             // all N decisions, frozen included
    std::uint64_t kernel_evals = 0;     // llr_odd + llr_even invocations
};

// Successive cancellation decode; returns the message bits in info-set
// order. Decisions run in coordinate order; frozen coordinates are forced
// to frozen_value and propagate into later partial sums.
BitBlock decode(const CodeSpec& spec, const LlrBlock& channel_llrs, DecodeTrace* trace = nullptr);

}  // namespace vlcpolar
