#ifndef CLONESIM_METRICS_HPP
#define CLONESIM_METRICS_HPP

#include "clonesim/distribution.hpp"
#include "clonesim/rational.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace clonesim {

/// Raised when no multi-photon events exist, i.e. the renormalization
/// denominator 1 - p(1,0) - p(0,1) vanishes. The averages are taken only
/// over cases with at least two photons in the final state.
struct UndefinedMetricError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Average relative frequency of right-polarized photons over outcomes
/// with at least two photons: sum over k+l >= 2 of p'(k,l) * k/(k+l).
double f_clones(const PhotonCountDistribution& p);

/// Fidelity an ensemble of optimal cloners would reach on the same photon
/// number distribution: sum of p'(n) * (2n+1)/(3n).
double f_opt(const PhotonCountDistribution& p);

/// Fidelity of purely random photon production: sum of p'(n) * (n+1)/(2n).
double f_rand(const PhotonCountDistribution& p);

/// Exact optimal N -> M cloning fidelity, (NM + N + M) / (M (N + 2)).
/// Requires M >= N >= 1.
Rational optimal_fidelity(int n_in, int m_out);

/// (n_all, n_right): mean total photon number and mean number of
/// right-polarized photons, unrenormalized over the full distribution.
std::pair<double, double> mean_photon_numbers(const PhotonCountDistribution& p);

struct MetricReport {
    std::optional<double> f_clones;
    std::optional<double> f_opt;
    std::optional<double> f_rand;
    double n_all = 0.0;
    double n_right = 0.0;
    double renorm_denominator = 0.0;
};

/// All metrics at once; fidelities are absent when no multi-photon events
/// exist instead of raising.
MetricReport metric_report(const PhotonCountDistribution& p);

} // namespace clonesim

#endif
