#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vlcpolar/bits.hpp"

namespace vlcpolar {

// Codeword-weight counts for a fixed block length. Mergeable.
class WeightHistogram {
  public:
    explicit WeightHistogram(std::size_t block_length);

    void record(const BitBlock& codeword);
    void merge(const WeightHistogram& other);

    std::size_t block_length() const { return counts_.size() - 1; }
    std::uint64_t samples() const { return samples_; }
    const std::vector<std::uint64_t>& counts() const { return counts_; }

    double mean() const;
    double stddev() const;  // population
    // Fraction of samples with weight in [lo, hi].
    double mass_in(std::size_t lo, std::size_t hi) const;

    // Running sums kept alongside the counts, for cross-checking.
    double sum_weight() const { return sum_w_; }
    double sum_weight_sq() const { return sum_w2_; }

  private:
    std::vector<std::uint64_t> counts_;
    std::uint64_t samples_ = 0;
    double sum_w_ = 0.0;
    double sum_w2_ = 0.0;
};

// Counts of maximal equal-symbol runs by length. Mergeable.
class RunLengthHistogram {
  public:
    void record(const BitBlock& block);
    void merge(const RunLengthHistogram& other);

    std::uint64_t samples() const { return samples_; }
    std::uint64_t total_bits() const { return total_bits_; }
    const std::map<std::size_t, std::uint64_t>& counts() const { return counts_; }

    std::uint64_t count(std::size_t len) const;
    std::size_t max_run() const;
    // Sum of len*count(len) over len <= max_len.
    std::uint64_t bits_in_runs_up_to(std::size_t max_len) const;

  private:
    std::map<std::size_t, std::uint64_t> counts_;
    std::uint64_t samples_ = 0;
    std::uint64_t total_bits_ = 0;
};

struct BerSummary {
    double ber = 0.0;
    double fer = 0.0;
    double half_width = 0.0;  // 95% Wald interval on the BER
};

// Error accounting for one operating point. Mergeable; totals are plain
// sums so merge order never matters.
struct TrialLedger {
    double rate = 0.0;
    double dimming = 0.5;
    std::string axis = "snr";
    double axis_db = 0.0;

    std::uint64_t bits_sent = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t blocks_sent = 0;
    std::uint64_t block_errors = 0;

    void record_block(std::size_t errors, std::size_t message_bits);
    void merge(const TrialLedger& other);
    BerSummary summarize() const;  // throws if no bits recorded
};

struct EfficiencyRow {
    double dimming = 0.5;
    std::string scheme;
    double code_rate = 0.0;
    double efficiency = 0.0;
};

// Overall efficiency of the compensation-symbol scheme for each
// (dimming, rate) pair, plus fixed literature baselines at the dimming
// levels they are quoted for.
std::vector<EfficiencyRow> efficiency_table(const std::vector<double>& rates,
                                            const std::vector<double>& dimmings,
                                            std::size_t n_code);

}  // namespace vlcpolar
