#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vlcpolar/metrics.hpp"

namespace vlcpolar {

enum class ExperimentKind { weight_dist, run_length, ber_sweep, efficiency };
enum class SweepAxis { snr, ebn0 };

std::string to_string(ExperimentKind kind);
std::string to_string(SweepAxis axis);

// Inclusive dB grid "start:stop:step".
struct GridSpec {
    double start = 2.0;
    double stop = 8.0;
    double step = 2.0;

    std::vector<double> values() const;
    static GridSpec parse(const std::string& text);
    std::string to_text() const;
};

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::ber_sweep;
    std::size_t n = 1024;
    std::vector<double> rates = {0.25, 0.5, 0.75};
    std::vector<double> dimmings = {0.5};
    SweepAxis axis = SweepAxis::snr;
    GridSpec grid_db;
    std::uint64_t trials = 2000;
    std::string interleaver = "none";
    std::uint64_t seed = 1;
    std::string out = "experiment.csv";

    // Command-line only; not config-file keys.
    unsigned workers = 1;
    std::uint64_t max_block_errors = 0;  // 0 disables early stop

    void validate() const;  // throws invalid_argument naming the field
};

// Plain key-value file, one "key = value" per line, '#' comments. Unknown
// keys are rejected. Starts from the built-in defaults.
ExperimentConfig load_config_file(const std::string& path);
// Same parser applied to one key/value pair (used for flag overrides too).
void apply_config_entry(ExperimentConfig& cfg, const std::string& key, const std::string& value);

struct BerRow {
    double rate = 0.0;
    double dimming = 0.5;
    SweepAxis axis = SweepAxis::snr;
    double axis_db = 0.0;
    double ber = 0.0;
    double fer = 0.0;
    double half_width = 0.0;
    std::uint64_t bits_sent = 0;

    friend bool operator==(const BerRow&, const BerRow&) = default;
};

struct WeightRow {
    double rate = 0.0;
    std::size_t weight = 0;
    std::uint64_t count = 0;

    friend bool operator==(const WeightRow&, const WeightRow&) = default;
};

struct RunLengthRow {
    double rate = 0.0;
    std::size_t run_length = 0;
    double avg_count = 0.0;  // runs of this length per codeword

    friend bool operator==(const RunLengthRow&, const RunLengthRow&) = default;
};

// Deterministic for a fixed (config, seed, workers); rows follow config
// order with the grid ascending.
std::vector<BerRow> run_ber_sweep(const ExperimentConfig& cfg);
std::vector<WeightRow> run_weight_dist(const ExperimentConfig& cfg);
std::vector<RunLengthRow> run_run_length(const ExperimentConfig& cfg);
std::vector<EfficiencyRow> run_efficiency(const ExperimentConfig& cfg);

std::string to_csv(const std::vector<BerRow>& rows);
std::string to_csv(const std::vector<WeightRow>& rows);
std::string to_csv(const std::vector<RunLengthRow>& rows);
std::string to_csv(const std::vector<EfficiencyRow>& rows);

// Dispatches on cfg.experiment and writes cfg.out; returns the CSV text.
std::string run_experiment(const ExperimentConfig& cfg);

// splitmix64-style stream splitter for per-point, per-worker seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

}  // namespace vlcpolar
