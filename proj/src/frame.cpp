#include "vlcpolar/frame.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <stdexcept>

namespace vlcpolar {

namespace {

constexpr double kMaxCompensation = 4294967296.0;  // keep frame lengths addressable

std::size_t parse_size(std::string_view text, const char* what) {
    std::size_t value = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw std::invalid_argument(std::string("interleaver: bad ") + what + " in spec");
    return value;
}

template <typename T>
std::vector<T> apply_perm(const std::vector<T>& in, const std::vector<std::uint32_t>& perm) {
    std::vector<T> out(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) out[perm[i]] = in[i];
    return out;
}

template <typename T>
std::vector<T> undo_perm(const std::vector<T>& in, const std::vector<std::uint32_t>& perm) {
    std::vector<T> out(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = in[perm[i]];
    return out;
}

}  // namespace

DimmingPlan plan_dimming(std::size_t n_code, double target_d) {
    if (n_code == 0) throw std::invalid_argument("plan_dimming: empty codeword");
    if (!(target_d > 0.0) || !(target_d < 1.0))
        throw std::invalid_argument("plan_dimming: target dimming must lie in (0, 1)");

    DimmingPlan plan;
    plan.target_d = target_d;
    plan.n_code = n_code;
    const double n = static_cast<double>(n_code);
    double cs;
    if (target_d >= 0.5) {
        plan.cs_value = 1;
        cs = std::round(n * (target_d - 0.5) / (1.0 - target_d));
    } else {
        plan.cs_value = 0;
        cs = std::round(n * (0.5 - target_d) / target_d);
    }
    if (!(cs < kMaxCompensation))
        throw std::range_error("plan_dimming: compensation budget overflows for target_d = " +
                               std::to_string(target_d));
    plan.n_cs = static_cast<std::size_t>(cs);
    plan.frame_len = n_code + plan.n_cs;
    return plan;
}

BitBlock assemble_frame(const BitBlock& codeword, const DimmingPlan& plan) {
    if (codeword.size() != plan.n_code)
        throw std::invalid_argument("assemble_frame: codeword length does not match the plan");
    BitBlock frame(plan.frame_len, BitRole::frame);
    std::copy(codeword.bits.begin(), codeword.bits.end(), frame.bits.begin());
    std::fill(frame.bits.begin() + static_cast<std::ptrdiff_t>(plan.n_code), frame.bits.end(),
              plan.cs_value);
    return frame;
}

BitBlock disassemble_frame(const BitBlock& frame, const DimmingPlan& plan) {
    if (frame.size() != plan.frame_len)
        throw std::invalid_argument("disassemble_frame: frame length does not match the plan");
    return BitBlock(std::vector<Bit>(frame.bits.begin(),
                                     frame.bits.begin() + static_cast<std::ptrdiff_t>(plan.n_code)),
                    BitRole::codeword);
}

LlrBlock disassemble_frame(const LlrBlock& frame_llrs, const DimmingPlan& plan) {
    if (frame_llrs.size() != plan.frame_len)
        throw std::invalid_argument("disassemble_frame: frame length does not match the plan");
    return LlrBlock(std::vector<double>(
        frame_llrs.llrs.begin(),
        frame_llrs.llrs.begin() + static_cast<std::ptrdiff_t>(plan.n_code)));
}

InterleaverMap::InterleaverMap(std::vector<std::uint32_t> perm, std::string spec)
    : perm_(std::move(perm)), spec_(std::move(spec)) {
    std::vector<std::uint8_t> seen(perm_.size(), 0);
    for (auto p : perm_) {
        if (p >= perm_.size() || seen[p])
            throw std::invalid_argument("interleaver: mapping is not a permutation");
        seen[p] = 1;
    }
}

InterleaverMap InterleaverMap::identity(std::size_t len) {
    std::vector<std::uint32_t> perm(len);
    for (std::size_t i = 0; i < len; ++i) perm[i] = static_cast<std::uint32_t>(i);
    return InterleaverMap(std::move(perm), "none");
}

InterleaverMap InterleaverMap::row_column(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("interleaver: rows and cols must be positive");
    std::vector<std::uint32_t> perm(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            perm[r * cols + c] = static_cast<std::uint32_t>(c * rows + r);
    return InterleaverMap(std::move(perm),
                          "rowcol:" + std::to_string(rows) + "x" + std::to_string(cols));
}

InterleaverMap InterleaverMap::seeded(std::uint64_t seed, std::size_t len) {
    std::vector<std::uint32_t> perm(len);
    for (std::size_t i = 0; i < len; ++i) perm[i] = static_cast<std::uint32_t>(i);
    // Explicit Fisher-Yates so the permutation is stable across library
    // implementations for a given seed.
    std::mt19937_64 rng(seed);
    for (std::size_t i = len; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(perm[i - 1], perm[j]);
    }
    return InterleaverMap(std::move(perm), "seeded:" + std::to_string(seed));
}

InterleaverMap InterleaverMap::from_spec(std::string_view spec, std::size_t len) {
    if (spec == "none") return identity(len);
    if (spec.rfind("rowcol:", 0) == 0) {
        const auto body = spec.substr(7);
        const auto x = body.find('x');
        if (x == std::string_view::npos)
            throw std::invalid_argument("interleaver: rowcol spec needs RxC");
        const std::size_t rows = parse_size(body.substr(0, x), "row count");
        const std::size_t cols = parse_size(body.substr(x + 1), "column count");
        if (rows == 0 || cols == 0 || rows * cols != len)
            throw std::invalid_argument("interleaver: rowcol shape " + std::string(body) +
                                        " does not cover frame length " + std::to_string(len));
        return row_column(rows, cols);
    }
    if (spec.rfind("seeded:", 0) == 0) {
        const std::size_t seed = parse_size(spec.substr(7), "seed");
        return seeded(seed, len);
    }
    throw std::invalid_argument("interleaver: unknown spec '" + std::string(spec) + "'");
}

BitBlock interleave(const BitBlock& frame, const InterleaverMap& map) {
    if (frame.size() != map.size())
        throw std::invalid_argument("interleave: frame length does not match the map");
    return BitBlock(apply_perm(frame.bits, map.permutation()), frame.role);
}

BitBlock deinterleave(const BitBlock& frame, const InterleaverMap& map) {
    if (frame.size() != map.size())
        throw std::invalid_argument("deinterleave: frame length does not match the map");
    return BitBlock(undo_perm(frame.bits, map.permutation()), frame.role);
}

LlrBlock interleave(const LlrBlock& frame, const InterleaverMap& map) {
    if (frame.size() != map.size())
        throw std::invalid_argument("interleave: frame length does not match the map");
    return LlrBlock(apply_perm(frame.llrs, map.permutation()));
}

LlrBlock deinterleave(const LlrBlock& frame, const InterleaverMap& map) {
    if (frame.size() != map.size())
        throw std::invalid_argument("deinterleave: frame length does not match the map");
    return LlrBlock(undo_perm(frame.llrs, map.permutation()));
}

std::vector<std::size_t> run_lengths(const BitBlock& block) {
    std::vector<std::size_t> runs;
    std::size_t i = 0;
    while (i < block.size()) {
        std::size_t j = i + 1;
        while (j < block.size() && block[j] == block[i]) ++j;
        runs.push_back(j - i);
        i = j;
    }
    return runs;
}

}  // namespace vlcpolar
