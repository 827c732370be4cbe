#ifndef CLONESIM_ATOMS_HPP
#define CLONESIM_ATOMS_HPP

#include "clonesim/distribution.hpp"
#include "clonesim/hilbert.hpp"
#include "clonesim/metrics.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace clonesim {

/// Parameters for a time-series run. The coupling never appears on its
/// own: dynamics depend only on the dimensionless product gamma*t, which
/// is the time axis throughout.
struct AtomsSimConfig {
    int n_atoms = 1;
    double gamma_t_max = 1.0;
    int steps = 100; // uniform grid of steps+1 points from 0 to gamma_t_max
};

/// One pure component of the initial ensemble, confined to a single
/// conserved-charge sector.
struct WeightedPureState {
    double weight = 0.0;
    std::shared_ptr<const Sector> sector;
    StateVector state;
};

struct FidelityPoint {
    double gamma_t = 0.0;
    std::optional<double> f_clones;
    std::optional<double> f_opt;
    std::optional<double> f_rand;
    double n_all = 0.0;
    double n_right = 0.0;
};

struct FidelityCurve {
    std::vector<FidelityPoint> rows;
};

/// Interaction Hamiltonian of the sector, divided by the coupling:
/// every ground-level atom exchanges excitation with each mode at the
/// bosonic rate sqrt(photon number).
HermitianOperator build_hamiltonian(const Sector& sector);

/// Initial ensemble for n_atoms emitters, each in the equal mixture of
/// the two excited levels, with one incoming photon in mode 1. Atom
/// permutation symmetry reduces the 2^n mixture to one representative
/// per count m of atoms in E1, weighted C(n, m) / 2^n.
std::vector<WeightedPureState> initial_ensemble(int n_atoms);

/// Ensemble with eigendecompositions done once, reusable across a time grid.
class PreparedEnsemble {
public:
    explicit PreparedEnsemble(std::vector<WeightedPureState> ensemble);

    PhotonCountDistribution distribution(double gamma_t) const;

private:
    struct Member {
        double weight;
        std::shared_ptr<const Sector> sector;
        Propagator propagator;
        StateVector initial;
    };
    std::vector<Member> members_;
};

/// Evolves each ensemble member to gamma_t and accumulates the photon
/// count distribution p(k, l).
PhotonCountDistribution photon_distribution(const std::vector<WeightedPureState>& ensemble,
                                            double gamma_t);

/// Fidelity and photon-number curves on a uniform time grid. The
/// gamma_t = 0 row has exactly one photon, so the fidelities are
/// undefined there and reported as absent values.
FidelityCurve simulate_time_series(const AtomsSimConfig& config);

} // namespace clonesim

#endif
