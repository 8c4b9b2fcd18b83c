#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "vlcpolar/sim.hpp"

using namespace vlcpolar;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = "/tmp/" + name;
    std::ofstream out(path);
    out << text;
    return path;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("grid parsing") {
    const auto g = GridSpec::parse("1:9:0.5");
    const auto v = g.values();
    REQUIRE(v.size() == 17);
    CHECK(v.front() == 1.0);
    CHECK(v.back() == doctest::Approx(9.0));

    CHECK(GridSpec::parse("4.9:4.9:1").values() == std::vector<double>{4.9});
    CHECK(GridSpec::parse("-2:2:2").values().size() == 3);

    CHECK_THROWS_AS(GridSpec::parse("1:9"), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec::parse("1:9:0"), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec::parse("9:1:1"), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec::parse("a:b:c"), std::invalid_argument);
}

TEST_CASE("config file parsing honors every key and rejects unknown ones") {
    const auto path = write_temp("sim_cfg_full.cfg",
                                 "# comment line\n"
                                 "experiment = weight_dist\n"
                                 "n = 256\n"
                                 "rates = 0.25,0.5\n"
                                 "dimmings = 0.6,0.75\n"
                                 "axis = ebn0\n"
                                 "grid_db = 0:4:2\n"
                                 "\n"
                                 "trials = 123\n"
                                 "interleaver = rowcol:16x16\n"
                                 "seed = 99\n"
                                 "out = /tmp/w.csv\n");
    const auto cfg = load_config_file(path);
    CHECK(cfg.experiment == ExperimentKind::weight_dist);
    CHECK(cfg.n == 256);
    CHECK(cfg.rates == std::vector<double>{0.25, 0.5});
    CHECK(cfg.dimmings == std::vector<double>{0.6, 0.75});
    CHECK(cfg.axis == SweepAxis::ebn0);
    CHECK(cfg.grid_db.to_text() == "0:4:2");
    CHECK(cfg.trials == 123);
    CHECK(cfg.interleaver == "rowcol:16x16");
    CHECK(cfg.seed == 99);
    CHECK(cfg.out == "/tmp/w.csv");

    const auto bad = write_temp("sim_cfg_bad.cfg", "samples = 10\n");
    CHECK_THROWS_WITH_AS(load_config_file(bad), doctest::Contains("samples"),
                         std::invalid_argument);
    CHECK_THROWS_AS(load_config_file("/tmp/does_not_exist.cfg"), std::runtime_error);
}

TEST_CASE("entry application and validation name the offending field") {
    ExperimentConfig cfg;
    apply_config_entry(cfg, "trials", "50");
    CHECK(cfg.trials == 50);
    CHECK_THROWS_WITH_AS(apply_config_entry(cfg, "axis", "snrdb"), doctest::Contains("axis"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(apply_config_entry(cfg, "experiment", "nope"),
                         doctest::Contains("experiment"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(apply_config_entry(cfg, "n", "x"), doctest::Contains("n"),
                         std::invalid_argument);

    cfg = ExperimentConfig{};
    cfg.n = 100;  // not a power of two
    CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("n"), std::invalid_argument);
    cfg = ExperimentConfig{};
    cfg.rates = {0.0};
    CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("rates"), std::invalid_argument);
    cfg = ExperimentConfig{};
    cfg.dimmings = {1.0};
    CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("dimmings"), std::invalid_argument);
    cfg = ExperimentConfig{};
    cfg.trials = 0;
    CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("trials"), std::invalid_argument);
    cfg = ExperimentConfig{};
    cfg.workers = 0;
    CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("workers"), std::invalid_argument);
}

TEST_CASE("seed mixing separates points and workers") {
    CHECK(mix_seed(1, 0, 0) == mix_seed(1, 0, 0));
    CHECK(mix_seed(1, 0, 0) != mix_seed(1, 0, 1));
    CHECK(mix_seed(1, 0, 0) != mix_seed(1, 1, 0));
    CHECK(mix_seed(1, 0, 0) != mix_seed(2, 0, 0));
}

TEST_CASE("weight sweep accounts for every sample") {
    ExperimentConfig cfg;
    cfg.experiment = ExperimentKind::weight_dist;
    cfg.n = 64;
    cfg.rates = {0.5, 0.75};
    cfg.trials = 200;
    cfg.seed = 5;
    const auto rows = run_weight_dist(cfg);
    for (double rate : cfg.rates) {
        std::uint64_t total = 0;
        std::size_t prev_weight = 0;
        bool first = true;
        for (const auto& r : rows) {
            if (r.rate != rate) continue;
            total += r.count;
            if (!first) CHECK(r.weight > prev_weight);
            prev_weight = r.weight;
            first = false;
        }
        CHECK(total == cfg.trials);
    }
    CHECK(run_weight_dist(cfg) == rows);  // deterministic
}

TEST_CASE("run-length sweep conserves mass per codeword") {
    ExperimentConfig cfg;
    cfg.experiment = ExperimentKind::run_length;
    cfg.n = 64;
    cfg.rates = {0.5};
    cfg.trials = 150;
    cfg.seed = 6;
    const auto rows = run_run_length(cfg);
    double mass = 0.0;
    for (const auto& r : rows) mass += static_cast<double>(r.run_length) * r.avg_count;
    CHECK(mass == doctest::Approx(64.0).epsilon(1e-9));
}

TEST_CASE("ber sweep shape, determinism, and early stop") {
    ExperimentConfig cfg;
    cfg.experiment = ExperimentKind::ber_sweep;
    cfg.n = 64;
    cfg.rates = {0.5};
    cfg.dimmings = {0.5, 0.75};
    cfg.grid_db = GridSpec{0.0, 4.0, 4.0};
    cfg.trials = 40;
    cfg.seed = 7;
    cfg.interleaver = "seeded:3";

    const auto rows = run_ber_sweep(cfg);
    REQUIRE(rows.size() == 4);  // 1 rate x 2 dimmings x 2 grid points
    for (const auto& r : rows) {
        CHECK(r.bits_sent == 40 * 32);
        CHECK(r.ber >= 0.0);
        CHECK(r.ber <= 1.0);
        CHECK(r.fer >= r.ber);
    }
    CHECK(to_csv(run_ber_sweep(cfg)) == to_csv(rows));

    ExperimentConfig stopped = cfg;
    stopped.max_block_errors = 1;
    stopped.grid_db = GridSpec{-10.0, -10.0, 1.0};  // noisy enough to stop early
    const auto short_rows = run_ber_sweep(stopped);
    CHECK(short_rows.front().bits_sent < 40 * 32);

    ExperimentConfig two = cfg;
    two.workers = 2;
    const auto rows2 = run_ber_sweep(two);
    CHECK(to_csv(run_ber_sweep(two)) == to_csv(rows2));  // deterministic per worker count
    for (const auto& r : rows2) CHECK(r.bits_sent == 40 * 32);
}

TEST_CASE("ebn0 axis shifts the operating point per rate") {
    ExperimentConfig cfg;
    cfg.n = 64;
    cfg.rates = {0.25, 0.5};
    cfg.grid_db = GridSpec{8.0, 8.0, 1.0};
    cfg.trials = 25;
    cfg.seed = 9;
    cfg.axis = SweepAxis::ebn0;
    const auto rows = run_ber_sweep(cfg);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].axis_db == 8.0);
    CHECK(rows[1].axis_db == 8.0);
    CHECK(rows[0].axis == SweepAxis::ebn0);
}

TEST_CASE("sixty dB pipeline is the identity for every rate and dimming") {
    ExperimentConfig cfg;
    cfg.n = 256;
    cfg.rates = {0.25, 0.5, 0.75};
    cfg.dimmings = {0.25, 0.5, 0.75};
    cfg.grid_db = GridSpec{60.0, 60.0, 1.0};
    cfg.trials = 20;
    cfg.seed = 11;
    cfg.interleaver = "seeded:1";
    for (const auto& row : run_ber_sweep(cfg)) {
        CHECK(row.ber == 0.0);
        CHECK(row.fer == 0.0);
    }
}

TEST_CASE("csv headers are pinned") {
    CHECK(to_csv(std::vector<BerRow>{}) ==
          "rate,dimming,axis,axis_db,ber,fer,half_width,bits_sent\n");
    CHECK(to_csv(std::vector<WeightRow>{}) == "rate,weight,count\n");
    CHECK(to_csv(std::vector<RunLengthRow>{}) == "rate,run_length,avg_count\n");
    CHECK(to_csv(std::vector<EfficiencyRow>{}) == "dimming,scheme,code_rate,efficiency\n");
}

TEST_CASE("run_experiment writes the csv it returns") {
    ExperimentConfig cfg;
    cfg.experiment = ExperimentKind::efficiency;
    cfg.rates = {0.5};
    cfg.dimmings = {0.5, 0.75};
    cfg.out = "/tmp/vlcpolar_eff_test.csv";
    const auto text = run_experiment(cfg);
    CHECK(text == slurp(cfg.out));
    CHECK(text.rfind("dimming,scheme,code_rate,efficiency\n", 0) == 0);
    std::remove(cfg.out.c_str());
}

TEST_CASE("weight rows match their csv rendering") {
    std::vector<WeightRow> rows = {{0.5, 510, 3}, {0.5, 512, 7}};
    CHECK(to_csv(rows) == "rate,weight,count\n0.5,510,3\n0.5,512,7\n");
}
