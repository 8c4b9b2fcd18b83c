#include "vlcpolar/construct.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace vlcpolar {

namespace {
constexpr unsigned kMaxStages = 30;
}

ReliabilityProfile compute_reliability(unsigned stages, double z0) {
    if (stages == 0 || stages > kMaxStages)
        throw std::invalid_argument("compute_reliability: stages must be in [1, " +
                                    std::to_string(kMaxStages) + "]");
    if (!(z0 > 0.0) || !(z0 < 1.0))
        throw std::invalid_argument("compute_reliability: z0 must lie in (0, 1)");

    // One degrade/upgrade split per stage; the branch for the most recent
    // stage lands in the low index bit, so coordinate i reads its transform
    // sequence from its binary expansion MSB first. Index 0 is the
    // all-degraded coordinate.
    std::vector<double> scores{z0};
    for (unsigned s = 0; s < stages; ++s) {
        std::vector<double> next(scores.size() * 2);
        for (std::size_t j = 0; j < scores.size(); ++j) {
            const double z = scores[j];
            next[2 * j] = 2.0 * z - z * z;
            next[2 * j + 1] = z * z;
        }
        scores = std::move(next);
    }

    ReliabilityProfile prof;
    prof.stages = stages;
    prof.design_z0 = z0;
    prof.scores = std::move(scores);
    return prof;
}

CodeSpec::CodeSpec(std::size_t block_length, std::vector<std::uint32_t> info_set, Bit frozen_value)
    : n_(block_length), info_set_(std::move(info_set)), frozen_value_(frozen_value) {
    if (n_ < 2 || !std::has_single_bit(n_))
        throw std::invalid_argument("CodeSpec: block length must be a power of two >= 2");
    if (info_set_.empty() || info_set_.size() > n_)
        throw std::invalid_argument("CodeSpec: info set size must be in [1, N]");
    if (frozen_value_ > 1) throw std::invalid_argument("CodeSpec: frozen value must be 0 or 1");
    stages_ = static_cast<unsigned>(std::countr_zero(n_));
    std::sort(info_set_.begin(), info_set_.end());
    info_mask_.assign(n_, 0);
    for (auto i : info_set_) {
        if (i >= n_) throw std::invalid_argument("CodeSpec: info index out of range");
        if (info_mask_[i]) throw std::invalid_argument("CodeSpec: duplicate info index");
        info_mask_[i] = 1;
    }
}

std::string CodeSpec::to_text() const {
    std::ostringstream out;
    out << n_ << ' ' << info_set_.size() << ' ' << static_cast<int>(frozen_value_) << '\n';
    for (std::size_t j = 0; j < info_set_.size(); ++j) {
        if (j) out << ' ';
        out << info_set_[j];
    }
    out << '\n';
    return out.str();
}

CodeSpec CodeSpec::from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::size_t n = 0, k = 0;
    int frozen = -1;
    if (!(in >> n >> k >> frozen))
        throw std::invalid_argument("CodeSpec: malformed header line");
    if (frozen != 0 && frozen != 1)
        throw std::invalid_argument("CodeSpec: frozen value must be 0 or 1");
    std::vector<std::uint32_t> info(k);
    for (auto& idx : info)
        if (!(in >> idx)) throw std::invalid_argument("CodeSpec: truncated info set");
    std::uint32_t extra;
    if (in >> extra) throw std::invalid_argument("CodeSpec: trailing tokens");
    return CodeSpec(n, std::move(info), static_cast<Bit>(frozen));
}

CodeSpec select_info_set(const ReliabilityProfile& profile, std::size_t k) {
    const std::size_t n = profile.block_length();
    if (k == 0 || k > n)
        throw std::invalid_argument("select_info_set: k must be in [1, N]");

    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (profile.scores[a] != profile.scores[b]) return profile.scores[a] < profile.scores[b];
        return a < b;  // equal scores go to the lower coordinate
    });
    order.resize(k);
    return CodeSpec(n, std::move(order));
}

CodeSpec design_code(unsigned stages, std::size_t k, double z0) {
    return select_info_set(compute_reliability(stages, z0), k);
}

}  // namespace vlcpolar
