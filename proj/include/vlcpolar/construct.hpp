#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vlcpolar/bits.hpp"

namespace vlcpolar {

// Per-coordinate Bhattacharyya upper bounds after `stages` polarization
// steps from a design erasure rate z0. scores[i] bounds the error rate of
// the i-th successive decision, so lower is more reliable and info_set
// indexes the decision sequence directly.
struct ReliabilityProfile {
    unsigned stages = 0;
    double design_z0 = 0.5;
    std::vector<double> scores;

    std::size_t block_length() const { return scores.size(); }
};

// stages >= 1 (block length 2^stages), 0 < z0 < 1.
ReliabilityProfile compute_reliability(unsigned stages, double z0 = 0.5);

// Frozen/information split of a block code. Immutable after construction.
class CodeSpec {
  public:
    CodeSpec(std::size_t block_length, std::vector<std::uint32_t> info_set, Bit frozen_value = 0);

    std::size_t block_length() const { return n_; }
    std::size_t message_length() const { return info_set_.size(); }
    unsigned stages() const { return stages_; }
    double rate() const { return static_cast<double>(info_set_.size()) / static_cast<double>(n_); }
    Bit frozen_value() const { return frozen_value_; }
    const std::vector<std::uint32_t>& info_set() const { return info_set_; }
    bool is_info(std::size_t i) const { return info_mask_[i] != 0; }

    // Two-line text form: "N K frozen_value" then the info set indices.
    std::string to_text() const;
    static CodeSpec from_text(std::string_view text);

    friend bool operator==(const CodeSpec& a, const CodeSpec& b) {
        return a.n_ == b.n_ && a.info_set_ == b.info_set_ && a.frozen_value_ == b.frozen_value_;
    }

  private:
    std::size_t n_;
    unsigned stages_;
    std::vector<std::uint32_t> info_set_;
    Bit frozen_value_;
    std::vector<std::uint8_t> info_mask_;
};

// Picks the k most reliable coordinates; equal scores resolve toward the
// lower index. The returned info set is sorted ascending.
CodeSpec select_info_set(const ReliabilityProfile& profile, std::size_t k);

// compute_reliability + select_info_set in one step.
CodeSpec design_code(unsigned stages, std::size_t k, double z0 = 0.5);

}  // namespace vlcpolar
