#include "vlcpolar/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vlcpolar/frame.hpp"

namespace vlcpolar {

WeightHistogram::WeightHistogram(std::size_t block_length) : counts_(block_length + 1, 0) {
    if (block_length == 0) throw std::invalid_argument("weight histogram: empty block length");
}

void WeightHistogram::record(const BitBlock& codeword) {
    if (codeword.size() != block_length())
        throw std::invalid_argument("weight histogram: codeword length mismatch");
    const std::size_t w = codeword.weight();
    ++counts_[w];
    ++samples_;
    sum_w_ += static_cast<double>(w);
    sum_w2_ += static_cast<double>(w) * static_cast<double>(w);
}

void WeightHistogram::merge(const WeightHistogram& other) {
    if (other.block_length() != block_length())
        throw std::invalid_argument("weight histogram: block length mismatch in merge");
    for (std::size_t w = 0; w < counts_.size(); ++w) counts_[w] += other.counts_[w];
    samples_ += other.samples_;
    sum_w_ += other.sum_w_;
    sum_w2_ += other.sum_w2_;
}

double WeightHistogram::mean() const {
    if (samples_ == 0) throw std::domain_error("weight histogram: no samples");
    return sum_w_ / static_cast<double>(samples_);
}

double WeightHistogram::stddev() const {
    const double m = mean();
    return std::sqrt(std::max(0.0, sum_w2_ / static_cast<double>(samples_) - m * m));
}

double WeightHistogram::mass_in(std::size_t lo, std::size_t hi) const {
    if (samples_ == 0) throw std::domain_error("weight histogram: no samples");
    std::uint64_t inside = 0;
    for (std::size_t w = lo; w <= hi && w < counts_.size(); ++w) inside += counts_[w];
    return static_cast<double>(inside) / static_cast<double>(samples_);
}

void RunLengthHistogram::record(const BitBlock& block) {
    for (std::size_t len : run_lengths(block)) ++counts_[len];
    ++samples_;
    total_bits_ += block.size();
}

void RunLengthHistogram::merge(const RunLengthHistogram& other) {
    for (const auto& [len, cnt] : other.counts_) counts_[len] += cnt;
    samples_ += other.samples_;
    total_bits_ += other.total_bits_;
}

std::uint64_t RunLengthHistogram::count(std::size_t len) const {
    const auto it = counts_.find(len);
    return it == counts_.end() ? 0 : it->second;
}

std::size_t RunLengthHistogram::max_run() const {
    return counts_.empty() ? 0 : counts_.rbegin()->first;
}

std::uint64_t RunLengthHistogram::bits_in_runs_up_to(std::size_t max_len) const {
    std::uint64_t bits = 0;
    for (const auto& [len, cnt] : counts_) {
        if (len > max_len) break;
        bits += len * cnt;
    }
    return bits;
}

void TrialLedger::record_block(std::size_t errors, std::size_t message_bits) {
    if (errors > message_bits)
        throw std::invalid_argument("ledger: more errors than bits in a block");
    bits_sent += message_bits;
    bit_errors += errors;
    blocks_sent += 1;
    block_errors += errors > 0 ? 1 : 0;
}

void TrialLedger::merge(const TrialLedger& other) {
    bits_sent += other.bits_sent;
    bit_errors += other.bit_errors;
    blocks_sent += other.blocks_sent;
    block_errors += other.block_errors;
}

BerSummary TrialLedger::summarize() const {
    if (bits_sent == 0 || blocks_sent == 0)
        throw std::domain_error("ledger: no trials recorded, statistics undefined");
    BerSummary s;
    s.ber = static_cast<double>(bit_errors) / static_cast<double>(bits_sent);
    s.fer = static_cast<double>(block_errors) / static_cast<double>(blocks_sent);
    s.half_width = 1.96 * std::sqrt(s.ber * (1.0 - s.ber) / static_cast<double>(bits_sent));
    return s;
}

namespace {

// Published operating points quoted for the benchmark dimming levels; each
// row covers a bright value and its dark mirror.
struct Baseline {
    double bright;
    double rm_rate, rm_eff;
    double ldpc_rate, ldpc_eff;
};

constexpr Baseline kBaselines[] = {
    {0.5, 0.156, 0.156, 0.5, 0.24},
    {0.75, 0.25, 0.125, 0.5, 0.12},
    {0.875, 0.375, 0.093, 0.5, 0.06},
};

const Baseline* baseline_for(double dimming) {
    for (const auto& row : kBaselines) {
        const double mirror = 1.0 - row.bright;
        if (std::abs(dimming - row.bright) < 1e-12 || std::abs(dimming - mirror) < 1e-12)
            return &row;
    }
    return nullptr;
}

}  // namespace

std::vector<EfficiencyRow> efficiency_table(const std::vector<double>& rates,
                                            const std::vector<double>& dimmings,
                                            std::size_t n_code) {
    if (rates.empty()) throw std::invalid_argument("efficiency_table: rates must be non-empty");
    if (dimmings.empty())
        throw std::invalid_argument("efficiency_table: dimmings must be non-empty");
    for (double r : rates)
        if (!(r > 0.0) || r > 1.0)
            throw std::invalid_argument("efficiency_table: rates must lie in (0, 1]");
    for (double d : dimmings)
        if (!(d > 0.0) || !(d < 1.0))
            throw std::invalid_argument("efficiency_table: dimmings must lie in (0, 1)");

    std::vector<EfficiencyRow> rows;
    for (double d : dimmings) {
        const auto plan = plan_dimming(n_code, d);
        for (double rc : rates) {
            const auto k = static_cast<std::size_t>(std::lround(rc * static_cast<double>(n_code)));
            rows.push_back({d, "polar", rc, plan.overall_efficiency(k)});
        }
        if (const auto* base = baseline_for(d)) {
            rows.push_back({d, "rm", base->rm_rate, base->rm_eff});
            rows.push_back({d, "ldpc", base->ldpc_rate, base->ldpc_eff});
        }
    }
    return rows;
}

}  // namespace vlcpolar
