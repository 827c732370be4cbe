#ifndef CLONESIM_DISTRIBUTION_HPP
#define CLONESIM_DISTRIBUTION_HPP

#include <map>
#include <utility>

namespace clonesim {

/// Probability of finding k "right" and l "wrong" photons in the final
/// state. Keys are (k, l); entries that are exactly zero need not be stored.
class PhotonCountDistribution {
public:
    using Map = std::map<std::pair<int, int>, double>;

    PhotonCountDistribution() = default;

    /// Clips negatives within 1e-12 of zero, rejects anything more negative,
    /// and requires the total to be 1 within 1e-10.
    static PhotonCountDistribution from_map(Map probs);

    /// Like from_map but without the total-probability requirement; used
    /// for hand-built partial distributions in analysis code.
    static PhotonCountDistribution from_map_unchecked(Map probs);

    double probability(int k, int l) const;
    double total() const;
    const Map& entries() const { return probs_; }

private:
    Map probs_;
};

} // namespace clonesim

#endif
