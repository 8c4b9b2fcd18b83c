#include "vlcpolar/sim.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "vlcpolar/channel.hpp"
#include "vlcpolar/codec.hpp"
#include "vlcpolar/construct.hpp"
#include "vlcpolar/frame.hpp"

namespace vlcpolar {

std::string to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::weight_dist: return "weight_dist";
        case ExperimentKind::run_length: return "run_length";
        case ExperimentKind::ber_sweep: return "ber_sweep";
        case ExperimentKind::efficiency: return "efficiency";
    }
    return "?";
}

std::string to_string(SweepAxis axis) { return axis == SweepAxis::snr ? "snr" : "ebn0"; }

namespace {

double parse_double(std::string_view text, const std::string& field) {
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw std::invalid_argument(field + ": expected a number, got '" + std::string(text) + "'");
    return v;
}

std::uint64_t parse_u64(std::string_view text, const std::string& field) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw std::invalid_argument(field + ": expected a non-negative integer, got '" +
                                    std::string(text) + "'");
    return v;
}

std::vector<double> parse_double_list(std::string_view text, const std::string& field) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto piece = text.substr(pos, comma == std::string_view::npos ? text.size() - pos
                                                                            : comma - pos);
        out.push_back(parse_double(piece, field));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument(field + ": empty list");
    return out;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

}  // namespace

std::vector<double> GridSpec::values() const {
    if (!(step > 0.0)) throw std::invalid_argument("grid_db: step must be positive");
    if (stop < start) throw std::invalid_argument("grid_db: stop must not precede start");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = start + static_cast<double>(i) * step;
    return out;
}

GridSpec GridSpec::parse(const std::string& text) {
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("grid_db: expected start:stop:step");
    GridSpec g;
    g.start = parse_double(std::string_view(text).substr(0, c1), "grid_db");
    g.stop = parse_double(std::string_view(text).substr(c1 + 1, c2 - c1 - 1), "grid_db");
    g.step = parse_double(std::string_view(text).substr(c2 + 1), "grid_db");
    g.values();  // validates
    return g;
}

std::string GridSpec::to_text() const {
    return fmt("%g", start) + ":" + fmt("%g", stop) + ":" + fmt("%g", step);
}

void ExperimentConfig::validate() const {
    if (n < 2 || !std::has_single_bit(n))
        throw std::invalid_argument("n: block length must be a power of two >= 2");
    if (n > (std::size_t{1} << 20)) throw std::invalid_argument("n: block length too large");
    if (rates.empty()) throw std::invalid_argument("rates: empty");
    for (double r : rates) {
        if (!(r > 0.0) || r > 1.0) throw std::invalid_argument("rates: values must lie in (0, 1]");
        if (std::lround(r * static_cast<double>(n)) < 1)
            throw std::invalid_argument("rates: rate too small for this block length");
    }
    if (dimmings.empty()) throw std::invalid_argument("dimmings: empty");
    for (double d : dimmings)
        if (!(d > 0.0) || !(d < 1.0))
            throw std::invalid_argument("dimmings: values must lie in (0, 1)");
    grid_db.values();  // throws with the field name
    if (trials == 0) throw std::invalid_argument("trials: must be at least 1");
    if (out.empty()) throw std::invalid_argument("out: empty path");
    if (workers == 0) throw std::invalid_argument("workers: must be at least 1");
}

void apply_config_entry(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "experiment") {
        if (value == "weight_dist") cfg.experiment = ExperimentKind::weight_dist;
        else if (value == "run_length") cfg.experiment = ExperimentKind::run_length;
        else if (value == "ber_sweep") cfg.experiment = ExperimentKind::ber_sweep;
        else if (value == "efficiency") cfg.experiment = ExperimentKind::efficiency;
        else throw std::invalid_argument("experiment: unknown kind '" + value + "'");
    } else if (key == "n") {
        cfg.n = static_cast<std::size_t>(parse_u64(value, "n"));
    } else if (key == "rates") {
        cfg.rates = parse_double_list(value, "rates");
    } else if (key == "dimmings") {
        cfg.dimmings = parse_double_list(value, "dimmings");
    } else if (key == "axis") {
        if (value == "snr") cfg.axis = SweepAxis::snr;
        else if (value == "ebn0") cfg.axis = SweepAxis::ebn0;
        else throw std::invalid_argument("axis: expected snr or ebn0, got '" + value + "'");
    } else if (key == "grid_db") {
        cfg.grid_db = GridSpec::parse(value);
    } else if (key == "trials") {
        cfg.trials = parse_u64(value, "trials");
    } else if (key == "interleaver") {
        cfg.interleaver = value;
    } else if (key == "seed") {
        cfg.seed = parse_u64(value, "seed");
    } else if (key == "out") {
        cfg.out = value;
    } else {
        throw std::invalid_argument("config: unknown key '" + key + "'");
    }
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
    ExperimentConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto stripped = trim(line.substr(0, line.find('#')));
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        " is not 'key = value'");
        apply_config_entry(cfg, trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    }
    return cfg;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    // splitmix64 finalizer over the three words
    auto mix = [](std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    };
    return mix(mix(mix(seed) + a) + b);
}

namespace {

BitBlock random_message(std::size_t k, std::mt19937_64& rng) {
    BitBlock msg(k, BitRole::message);
    for (auto& b : msg.bits) b = static_cast<Bit>(rng() & 1u);
    return msg;
}

std::size_t message_bits(const ExperimentConfig& cfg, double rate) {
    return static_cast<std::size_t>(std::lround(rate * static_cast<double>(cfg.n)));
}

struct PointTask {
    const CodeSpec* spec;
    const DimmingPlan* plan;
    const InterleaverMap* imap;
    double snr_db;
    std::uint64_t trials;
    std::uint64_t stop_after;  // block errors per worker, 0 = never
    std::uint64_t channel_seed;
    std::uint64_t message_seed;
};

TrialLedger run_point_worker(const PointTask& task) {
    TrialLedger ledger;
    Channel channel(ChannelParams::from_snr_db(task.snr_db, task.channel_seed));
    std::mt19937_64 msg_rng(task.message_seed);
    const auto& spec = *task.spec;
    const auto& plan = *task.plan;
    const auto& imap = *task.imap;
    const auto params = channel.params();

    for (std::uint64_t t = 0; t < task.trials; ++t) {
        const auto msg = random_message(spec.message_length(), msg_rng);
        const auto codeword = encode(spec, msg);
        const auto frame = interleave(assemble_frame(codeword, plan), imap);
        const auto samples = channel.transmit(frame);
        const auto frame_llrs = deinterleave(demodulate_llr(samples, params), imap);
        const auto decoded = decode(spec, disassemble_frame(frame_llrs, plan));

        std::size_t errors = 0;
        for (std::size_t i = 0; i < msg.size(); ++i) errors += decoded[i] != msg[i];
        ledger.record_block(errors, msg.size());
        if (task.stop_after && ledger.block_errors >= task.stop_after) break;
    }
    return ledger;
}

TrialLedger run_point(const ExperimentConfig& cfg, const PointTask& base,
                      std::uint64_t point_index) {
    const unsigned workers = cfg.workers;
    std::vector<PointTask> tasks(workers, base);
    for (unsigned w = 0; w < workers; ++w) {
        auto& task = tasks[w];
        task.trials = cfg.trials / workers + (w < cfg.trials % workers ? 1 : 0);
        const std::uint64_t lane = mix_seed(cfg.seed, point_index, w);
        task.channel_seed = mix_seed(lane, 1, 0);
        task.message_seed = mix_seed(lane, 2, 0);
        if (cfg.max_block_errors)
            task.stop_after = (cfg.max_block_errors + workers - 1) / workers;
    }

    std::vector<TrialLedger> partials(workers);
    if (workers == 1) {
        partials[0] = run_point_worker(tasks[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] { partials[w] = run_point_worker(tasks[w]); });
        for (auto& th : pool) th.join();
    }

    TrialLedger total;
    for (const auto& part : partials) total.merge(part);
    return total;
}

}  // namespace

std::vector<BerRow> run_ber_sweep(const ExperimentConfig& cfg) {
    cfg.validate();
    const auto grid = cfg.grid_db.values();
    const auto stages = static_cast<unsigned>(std::countr_zero(cfg.n));

    std::vector<CodeSpec> specs;
    specs.reserve(cfg.rates.size());
    for (double rate : cfg.rates) specs.push_back(design_code(stages, message_bits(cfg, rate)));

    std::vector<BerRow> rows;
    std::uint64_t point_index = 0;
    for (std::size_t ri = 0; ri < cfg.rates.size(); ++ri) {
        for (double dimming : cfg.dimmings) {
            const auto plan = plan_dimming(cfg.n, dimming);
            const auto imap = InterleaverMap::from_spec(cfg.interleaver, plan.frame_len);
            for (double axis_db : grid) {
                PointTask task{};
                task.spec = &specs[ri];
                task.plan = &plan;
                task.imap = &imap;
                task.snr_db = cfg.axis == SweepAxis::snr
                                  ? axis_db
                                  : ebn0_to_snr(axis_db, specs[ri].rate());
                const auto ledger = run_point(cfg, task, point_index++);
                const auto summary = ledger.summarize();
                rows.push_back({cfg.rates[ri], dimming, cfg.axis, axis_db, summary.ber,
                                summary.fer, summary.half_width, ledger.bits_sent});
            }
        }
    }
    return rows;
}

std::vector<WeightRow> run_weight_dist(const ExperimentConfig& cfg) {
    cfg.validate();
    const auto stages = static_cast<unsigned>(std::countr_zero(cfg.n));
    std::vector<WeightRow> rows;
    for (std::size_t ri = 0; ri < cfg.rates.size(); ++ri) {
        const auto spec = design_code(stages, message_bits(cfg, cfg.rates[ri]));
        WeightHistogram hist(cfg.n);
        std::mt19937_64 rng(mix_seed(cfg.seed, ri, 0));
        for (std::uint64_t t = 0; t < cfg.trials; ++t)
            hist.record(encode(spec, random_message(spec.message_length(), rng)));
        for (std::size_t w = 0; w < hist.counts().size(); ++w)
            if (hist.counts()[w]) rows.push_back({cfg.rates[ri], w, hist.counts()[w]});
    }
    return rows;
}

std::vector<RunLengthRow> run_run_length(const ExperimentConfig& cfg) {
    cfg.validate();
    const auto stages = static_cast<unsigned>(std::countr_zero(cfg.n));
    std::vector<RunLengthRow> rows;
    for (std::size_t ri = 0; ri < cfg.rates.size(); ++ri) {
        const auto spec = design_code(stages, message_bits(cfg, cfg.rates[ri]));
        RunLengthHistogram hist;
        std::mt19937_64 rng(mix_seed(cfg.seed, ri, 0));
        for (std::uint64_t t = 0; t < cfg.trials; ++t)
            hist.record(encode(spec, random_message(spec.message_length(), rng)));
        for (const auto& [len, cnt] : hist.counts())
            rows.push_back({cfg.rates[ri], len,
                            static_cast<double>(cnt) / static_cast<double>(cfg.trials)});
    }
    return rows;
}

std::vector<EfficiencyRow> run_efficiency(const ExperimentConfig& cfg) {
    cfg.validate();
    return efficiency_table(cfg.rates, cfg.dimmings, cfg.n);
}

std::string to_csv(const std::vector<BerRow>& rows) {
    std::string out = "rate,dimming,axis,axis_db,ber,fer,half_width,bits_sent\n";
    for (const auto& r : rows) {
        out += fmt("%g", r.rate) + ',' + fmt("%g", r.dimming) + ',' + to_string(r.axis) + ',' +
               fmt("%g", r.axis_db) + ',' + fmt("%.6e", r.ber) + ',' + fmt("%.6e", r.fer) + ',' +
               fmt("%.6e", r.half_width) + ',' + std::to_string(r.bits_sent) + '\n';
    }
    return out;
}

std::string to_csv(const std::vector<WeightRow>& rows) {
    std::string out = "rate,weight,count\n";
    for (const auto& r : rows)
        out += fmt("%g", r.rate) + ',' + std::to_string(r.weight) + ',' +
               std::to_string(r.count) + '\n';
    return out;
}

std::string to_csv(const std::vector<RunLengthRow>& rows) {
    std::string out = "rate,run_length,avg_count\n";
    for (const auto& r : rows)
        out += fmt("%g", r.rate) + ',' + std::to_string(r.run_length) + ',' +
               fmt("%g", r.avg_count) + '\n';
    return out;
}

std::string to_csv(const std::vector<EfficiencyRow>& rows) {
    std::string out = "dimming,scheme,code_rate,efficiency\n";
    for (const auto& r : rows)
        out += fmt("%g", r.dimming) + ',' + r.scheme + ',' + fmt("%g", r.code_rate) + ',' +
               fmt("%g", r.efficiency) + '\n';
    return out;
}

std::string run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    std::string csv;
    switch (cfg.experiment) {
        case ExperimentKind::weight_dist: csv = to_csv(run_weight_dist(cfg)); break;
        case ExperimentKind::run_length: csv = to_csv(run_run_length(cfg)); break;
        case ExperimentKind::ber_sweep: csv = to_csv(run_ber_sweep(cfg)); break;
        case ExperimentKind::efficiency: csv = to_csv(run_efficiency(cfg)); break;
    }
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) throw std::runtime_error("out: cannot write '" + cfg.out + "'");
    out << csv;
    return csv;
}

}  // namespace vlcpolar
