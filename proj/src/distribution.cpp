#include "clonesim/distribution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace clonesim {

namespace {

void clip_negatives(PhotonCountDistribution::Map& probs) {
    for (auto it = probs.begin(); it != probs.end();) {
        if (it->second < 0.0) {
            if (it->second < -1e-12)
                throw std::runtime_error("PhotonCountDistribution: probability " +
                                         std::to_string(it->second) + " below tolerance");
            it->second = 0.0;
        }
        if (it->first.first < 0 || it->first.second < 0)
            throw std::invalid_argument("PhotonCountDistribution: negative photon count");
        ++it;
    }
}

} // namespace

PhotonCountDistribution PhotonCountDistribution::from_map(Map probs) {
    clip_negatives(probs);
    PhotonCountDistribution dist;
    dist.probs_ = std::move(probs);
    if (std::abs(dist.total() - 1.0) > 1e-10)
        throw std::runtime_error("PhotonCountDistribution: total probability " +
                                 std::to_string(dist.total()) + " != 1");
    return dist;
}

PhotonCountDistribution PhotonCountDistribution::from_map_unchecked(Map probs) {
    clip_negatives(probs);
    PhotonCountDistribution dist;
    dist.probs_ = std::move(probs);
    return dist;
}

double PhotonCountDistribution::probability(int k, int l) const {
    auto it = probs_.find({k, l});
    return it == probs_.end() ? 0.0 : it->second;
}

double PhotonCountDistribution::total() const {
    double sum = 0.0;
    for (const auto& [kl, p] : probs_) sum += p;
    return sum;
}

} // namespace clonesim
