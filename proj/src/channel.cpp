#include "vlcpolar/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vlcpolar/codec.hpp"

namespace vlcpolar {

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double snr_to_sigma(double snr_db) {
    const double snr_linear = std::pow(10.0, snr_db / 10.0);
    return (kOokAmplitude / 2.0) / std::sqrt(snr_linear);
}

double ebn0_to_snr(double ebn0_db, double rate) {
    if (!(rate > 0.0) || rate > 1.0)
        throw std::invalid_argument("ebn0_to_snr: rate must lie in (0, 1]");
    return ebn0_db + 10.0 * std::log10(rate);
}

double snr_to_ebn0(double snr_db, double rate) {
    if (!(rate > 0.0) || rate > 1.0)
        throw std::invalid_argument("snr_to_ebn0: rate must lie in (0, 1]");
    return snr_db - 10.0 * std::log10(rate);
}

ChannelParams ChannelParams::from_snr_db(double snr_db, std::uint64_t seed) {
    ChannelParams p;
    p.snr_db = snr_db;
    p.sigma = snr_to_sigma(snr_db);
    p.seed = seed;
    return p;
}

Channel::Channel(const ChannelParams& params)
    : params_(params), rng_(params.seed), gauss_(0.0, params.sigma) {
    if (!(params_.sigma > 0.0))
        throw std::invalid_argument("channel: sigma must be positive");
}

std::vector<double> Channel::transmit(const BitBlock& frame) {
    std::vector<double> samples(frame.size());
    for (std::size_t i = 0; i < frame.size(); ++i)
        samples[i] = kOokAmplitude * static_cast<double>(frame[i]) + gauss_(rng_);
    return samples;
}

LlrBlock demodulate_llr(const std::vector<double>& samples, const ChannelParams& params) {
    if (!(params.sigma > 0.0))
        throw std::invalid_argument("demodulate_llr: sigma must be positive");
    const double a = kOokAmplitude;
    const double scale = 1.0 / (2.0 * params.sigma * params.sigma);
    LlrBlock out(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double llr = (a * a - 2.0 * a * samples[i]) * scale;
        out[i] = std::clamp(llr, -kLlrClamp, kLlrClamp);
    }
    return out;
}

}  // namespace vlcpolar
