#include "clonesim/atoms.hpp"

#include "clonesim/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace clonesim {

HermitianOperator build_hamiltonian(const Sector& sector) {
    HermitianOperator h(static_cast<Eigen::Index>(sector.size()));
    // One unordered pair per (source state with a ground atom, atom index):
    // raising that atom and absorbing the matching photon lands on a unique
    // partner state, so each pair is visited exactly once.
    for (std::size_t i = 0; i < sector.size(); ++i) {
        const FockBasisState& from = sector.basis[i];
        for (std::size_t atom = 0; atom < from.atoms.size(); ++atom) {
            if (from.atoms[atom] != AtomLevel::G) continue;
            if (from.photons1 >= 1) {
                FockBasisState to = from;
                to.atoms[atom] = AtomLevel::E1;
                --to.photons1;
                auto j = sector.index_of(to);
                if (!j) throw std::logic_error("build_hamiltonian: sector not closed");
                h.add_pair(static_cast<Eigen::Index>(*j), static_cast<Eigen::Index>(i),
                           std::sqrt(static_cast<double>(from.photons1)));
            }
            if (from.photons2 >= 1) {
                FockBasisState to = from;
                to.atoms[atom] = AtomLevel::E2;
                --to.photons2;
                auto j = sector.index_of(to);
                if (!j) throw std::logic_error("build_hamiltonian: sector not closed");
                h.add_pair(static_cast<Eigen::Index>(*j), static_cast<Eigen::Index>(i),
                           std::sqrt(static_cast<double>(from.photons2)));
            }
        }
    }
    return h;
}

std::vector<WeightedPureState> initial_ensemble(int n_atoms) {
    if (n_atoms < 1) throw std::invalid_argument("initial_ensemble: n_atoms must be >= 1");
    std::vector<WeightedPureState> ensemble;
    ensemble.reserve(static_cast<std::size_t>(n_atoms) + 1);
    const double total = std::ldexp(1.0, n_atoms); // 2^n
    for (int m = 0; m <= n_atoms; ++m) {
        AtomConfig atoms(static_cast<std::size_t>(n_atoms), AtomLevel::E2);
        for (int i = 0; i < m; ++i) atoms[static_cast<std::size_t>(i)] = AtomLevel::E1;
        auto sector = std::make_shared<Sector>(
            enumerate_sector(n_atoms, m + 1, n_atoms - m));
        FockBasisState start{atoms, 1, 0};
        auto idx = sector->index_of(start);
        if (!idx) throw std::logic_error("initial_ensemble: start state missing from sector");
        StateVector psi = StateVector::Zero(static_cast<Eigen::Index>(sector->size()));
        psi[static_cast<Eigen::Index>(*idx)] = 1.0;
        ensemble.push_back(WeightedPureState{
            binomial_double(static_cast<std::uint32_t>(n_atoms), static_cast<std::uint32_t>(m)) / total,
            std::move(sector), std::move(psi)});
    }
    return ensemble;
}

PreparedEnsemble::PreparedEnsemble(std::vector<WeightedPureState> ensemble) {
    members_.reserve(ensemble.size());
    for (auto& member : ensemble) {
        Propagator prop(build_hamiltonian(*member.sector));
        members_.push_back(Member{member.weight, std::move(member.sector),
                                  std::move(prop), std::move(member.state)});
    }
}

PhotonCountDistribution PreparedEnsemble::distribution(double gamma_t) const {
    PhotonCountDistribution::Map probs;
    for (const Member& member : members_) {
        StateVector psi = member.propagator.apply(gamma_t, member.initial);
        for (std::size_t i = 0; i < member.sector->size(); ++i) {
            const FockBasisState& state = member.sector->basis[i];
            double p = member.weight * std::norm(psi[static_cast<Eigen::Index>(i)]);
            probs[{state.photons1, state.photons2}] += p;
        }
    }
    return PhotonCountDistribution::from_map(std::move(probs));
}

PhotonCountDistribution photon_distribution(const std::vector<WeightedPureState>& ensemble,
                                            double gamma_t) {
    return PreparedEnsemble(ensemble).distribution(gamma_t);
}

FidelityCurve simulate_time_series(const AtomsSimConfig& config) {
    if (config.n_atoms < 1 || config.steps < 1 || !(config.gamma_t_max > 0.0))
        throw std::invalid_argument("simulate_time_series: invalid configuration");

    PreparedEnsemble prepared(initial_ensemble(config.n_atoms));
    FidelityCurve curve;
    curve.rows.reserve(static_cast<std::size_t>(config.steps) + 1);
    for (int step = 0; step <= config.steps; ++step) {
        double gamma_t = config.gamma_t_max * step / config.steps;
        PhotonCountDistribution dist = prepared.distribution(gamma_t);
        MetricReport report = metric_report(dist);
        if (step > 0 && !report.f_clones)
            throw UndefinedMetricError("no multi-photon events at gamma_t > 0");
        curve.rows.push_back(FidelityPoint{gamma_t, report.f_clones, report.f_opt,
                                           report.f_rand, report.n_all, report.n_right});
    }
    return curve;
}

} // namespace clonesim
