#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vlcpolar/bits.hpp"

namespace vlcpolar {

// Compensation-symbol budget that shifts a frame's mean on-ratio from the
// codeword's 1/2 to target_d.
struct DimmingPlan {
    double target_d = 0.5;
    std::size_t n_code = 0;
    std::size_t n_cs = 0;
    Bit cs_value = 1;
    std::size_t frame_len = 0;

    // k info bits delivered per frame_len transmitted symbols.
    double overall_efficiency(std::size_t k) const {
        return static_cast<double>(k) / static_cast<double>(frame_len);
    }
};

// 0 < target_d < 1. n_cs = round(n_code*(target_d-0.5)/(1-target_d)) with
// on symbols for target_d >= 0.5, mirrored with off symbols below 0.5.
DimmingPlan plan_dimming(std::size_t n_code, double target_d);

// Codeword followed by n_cs copies of cs_value.
BitBlock assemble_frame(const BitBlock& codeword, const DimmingPlan& plan);

// First n_code positions of the frame.
BitBlock disassemble_frame(const BitBlock& frame, const DimmingPlan& plan);
LlrBlock disassemble_frame(const LlrBlock& frame_llrs, const DimmingPlan& plan);

// Bijective symbol reordering; out[perm[i]] = in[i].
class InterleaverMap {
  public:
    // perm must be a permutation of [0, perm.size()).
    explicit InterleaverMap(std::vector<std::uint32_t> perm, std::string spec = "custom");

    static InterleaverMap identity(std::size_t len);
    // Write row-wise into rows x cols, read column-wise.
    static InterleaverMap row_column(std::size_t rows, std::size_t cols);
    // Fisher-Yates permutation from a seeded mt19937_64.
    static InterleaverMap seeded(std::uint64_t seed, std::size_t len);
    // "none" | "rowcol:RxC" | "seeded:S"
    static InterleaverMap from_spec(std::string_view spec, std::size_t len);

    std::size_t size() const { return perm_.size(); }
    const std::vector<std::uint32_t>& permutation() const { return perm_; }
    const std::string& spec() const { return spec_; }

  private:
    std::vector<std::uint32_t> perm_;
    std::string spec_;
};

BitBlock interleave(const BitBlock& frame, const InterleaverMap& map);
BitBlock deinterleave(const BitBlock& frame, const InterleaverMap& map);
LlrBlock interleave(const LlrBlock& frame, const InterleaverMap& map);
LlrBlock deinterleave(const LlrBlock& frame, const InterleaverMap& map);

// Lengths of the maximal equal-symbol runs, in order of appearance.
std::vector<std::size_t> run_lengths(const BitBlock& block);

}  // namespace vlcpolar
