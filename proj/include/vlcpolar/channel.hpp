#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vlcpolar/bits.hpp"

namespace vlcpolar {

// On-off keying amplitude for the "on" symbol; "off" is 0. The detection
// threshold sits at half of it.
inline constexpr double kOokAmplitude = 1.0;

// Gaussian tail probability Q(x).
double q_function(double x);

// Noise level that makes the uncoded symbol error rate Q(sqrt(snr_linear)):
// sigma = (A/2)/sqrt(10^(snr_db/10)).
double snr_to_sigma(double snr_db);

// Axis conversions, snr_db = ebn0_db + 10*log10(rate). rate in (0, 1].
double ebn0_to_snr(double ebn0_db, double rate);
double snr_to_ebn0(double snr_db, double rate);

struct ChannelParams {
    double snr_db = 0.0;
    double sigma = 0.0;  // derived from snr_db
    std::uint64_t seed = 0;

    static ChannelParams from_snr_db(double snr_db, std::uint64_t seed);
};

// Memoryless OOK/AWGN channel. Owns its generator; a given (seed, frame
// sequence) reproduces the same samples.
class Channel {
  public:
    explicit Channel(const ChannelParams& params);

    const ChannelParams& params() const { return params_; }

    // sample_i = A*bit_i + N(0, sigma).
    std::vector<double> transmit(const BitBlock& frame);

  private:
    ChannelParams params_;
    std::mt19937_64 rng_;
    std::normal_distribution<double> gauss_;
};

// Exact per-sample LLR (A^2 - 2*A*s)/(2*sigma^2), clamped to +/-40.
LlrBlock demodulate_llr(const std::vector<double>& samples, const ChannelParams& params);

}  // namespace vlcpolar
