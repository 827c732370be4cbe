#include "clonesim/symmetry.hpp"

#include "clonesim/pdc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

namespace clonesim {

namespace {

std::vector<double> factorials(int up_to) {
    std::vector<double> f(static_cast<std::size_t>(up_to) + 1, 1.0);
    for (int i = 1; i <= up_to; ++i)
        f[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i - 1)] * i;
    return f;
}

} // namespace

Su2Rotation::Su2Rotation(std::complex<double> a, std::complex<double> b)
    : a_(a), b_(b) {
    double norm = std::norm(a) + std::norm(b);
    if (std::abs(norm - 1.0) > 1e-12)
        throw std::invalid_argument("Su2Rotation: |a|^2 + |b|^2 must be 1");
}

Su2Rotation compose(const Su2Rotation& second, const Su2Rotation& first) {
    // Column-0 entries of the 2x2 matrix product.
    std::complex<double> a = second.a() * first.a() - std::conj(second.b()) * first.b();
    std::complex<double> b = second.b() * first.a() + std::conj(second.a()) * first.b();
    return Su2Rotation(a, b);
}

std::vector<Su2Rotation> seeded_rotations(std::uint32_t seed, int count) {
    std::mt19937 rng(seed);
    // Raw 32-bit draws scaled by hand keep the sequence identical across
    // standard libraries.
    auto uniform = [&rng]() { return rng() * (1.0 / 4294967296.0); };
    std::vector<Su2Rotation> rotations;
    rotations.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        double u = uniform();
        double phi1 = 2.0 * M_PI * uniform();
        double phi2 = 2.0 * M_PI * uniform();
        std::complex<double> a = std::polar(std::sqrt(u), phi1);
        std::complex<double> b = std::polar(std::sqrt(1.0 - u), phi2);
        double norm = std::sqrt(std::norm(a) + std::norm(b));
        rotations.emplace_back(a / norm, b / norm);
    }
    return rotations;
}

Eigen::MatrixXcd fock_rotation_matrix(const Su2Rotation& rot, int total_photons) {
    if (total_photons < 0)
        throw std::invalid_argument("fock_rotation_matrix: negative photon number");
    const int n = total_photons;
    const auto fact = factorials(n);
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n + 1, n + 1);

    // Image of |k, n-k>: expand (a a1+ + b a2+)^k (-conj(b) a1+ + conj(a) a2+)^(n-k).
    std::vector<std::complex<double>> a_pow(static_cast<std::size_t>(n) + 1, 1.0);
    std::vector<std::complex<double>> b_pow = a_pow, cb_pow = a_pow, ca_pow = a_pow;
    for (int i = 1; i <= n; ++i) {
        a_pow[i] = a_pow[i - 1] * rot.a();
        b_pow[i] = b_pow[i - 1] * rot.b();
        cb_pow[i] = cb_pow[i - 1] * (-std::conj(rot.b()));
        ca_pow[i] = ca_pow[i - 1] * std::conj(rot.a());
    }
    for (int k = 0; k <= n; ++k) {
        double in_norm = std::sqrt(fact[k] * fact[n - k]);
        for (int p = 0; p <= k; ++p) {
            for (int q = 0; q <= n - k; ++q) {
                int n1 = p + (n - k - q);
                int n2 = n - n1;
                double binoms = fact[k] / (fact[p] * fact[k - p]) *
                                fact[n - k] / (fact[q] * fact[n - k - q]);
                std::complex<double> coeff = binoms * a_pow[p] * b_pow[k - p] *
                                             cb_pow[n - k - q] * ca_pow[q];
                d(n1, k) += coeff * std::sqrt(fact[n1] * fact[n2]) / in_norm;
            }
        }
    }
    return d;
}

std::vector<MultiSectorState> rotate_initial_photon(const Su2Rotation& rot, int n_atoms) {
    std::vector<WeightedPureState> canonical = initial_ensemble(n_atoms);
    std::vector<MultiSectorState> rotated;
    rotated.reserve(canonical.size());
    for (std::size_t m = 0; m < canonical.size(); ++m) {
        MultiSectorState member;
        member.weight = canonical[m].weight;

        // Same atomic representative as the canonical member m.
        AtomConfig config(static_cast<std::size_t>(n_atoms), AtomLevel::E2);
        for (std::size_t i = 0; i < m; ++i) config[i] = AtomLevel::E1;

        auto add_part = [&](std::complex<double> amplitude, int n1, int n2, int k, int l) {
            if (amplitude == std::complex<double>(0.0, 0.0)) return;
            auto sector = std::make_shared<Sector>(enumerate_sector(n_atoms, n1, n2));
            auto idx = sector->index_of(FockBasisState{config, k, l});
            if (!idx) throw std::logic_error("rotate_initial_photon: state missing");
            StateVector psi = StateVector::Zero(static_cast<Eigen::Index>(sector->size()));
            psi[static_cast<Eigen::Index>(*idx)] = amplitude;
            member.parts.emplace_back(std::move(sector), std::move(psi));
        };
        int m_int = static_cast<int>(m);
        add_part(rot.a(), m_int + 1, n_atoms - m_int, 1, 0);
        add_part(rot.b(), m_int, n_atoms - m_int + 1, 0, 1);
        rotated.push_back(std::move(member));
    }
    return rotated;
}

PreparedRotatedEnsemble::PreparedRotatedEnsemble(std::vector<MultiSectorState> ensemble,
                                                 const Su2Rotation& rot) {
    int max_total = 0;
    members_.reserve(ensemble.size());
    for (auto& member : ensemble) {
        Member prepared{member.weight, {}};
        prepared.parts.reserve(member.parts.size());
        for (auto& [sector, state] : member.parts) {
            for (const FockBasisState& basis_state : sector->basis)
                max_total = std::max(max_total,
                                     basis_state.photons1 + basis_state.photons2);
            Propagator prop(build_hamiltonian(*sector));
            prepared.parts.push_back(Part{std::move(sector), std::move(prop),
                                          std::move(state)});
        }
        members_.push_back(std::move(prepared));
    }
    Su2Rotation inv = rot.inverse();
    inverse_rotation_by_total_.reserve(static_cast<std::size_t>(max_total) + 1);
    for (int n = 0; n <= max_total; ++n)
        inverse_rotation_by_total_.push_back(fock_rotation_matrix(inv, n));
}

PhotonCountDistribution PreparedRotatedEnsemble::distribution(double gamma_t) const {
    PhotonCountDistribution::Map probs;
    for (const Member& member : members_) {
        // Amplitudes grouped by atomic configuration and total photon
        // number; the mode rotation acts within each group.
        std::map<std::pair<std::uint32_t, int>, Eigen::VectorXcd> groups;
        for (const Part& part : member.parts) {
            StateVector psi = part.propagator.apply(gamma_t, part.initial);
            for (std::size_t i = 0; i < part.sector->size(); ++i) {
                const FockBasisState& state = part.sector->basis[i];
                int total = state.photons1 + state.photons2;
                auto key = std::make_pair(atom_code(state.atoms), total);
                auto [it, inserted] = groups.try_emplace(key);
                if (inserted) it->second = Eigen::VectorXcd::Zero(total + 1);
                it->second[state.photons1] += psi[static_cast<Eigen::Index>(i)];
            }
        }
        for (const auto& [key, amplitudes] : groups) {
            int total = key.second;
            Eigen::VectorXcd rotated =
                inverse_rotation_by_total_[static_cast<std::size_t>(total)] * amplitudes;
            for (int k = 0; k <= total; ++k)
                probs[{k, total - k}] += member.weight * std::norm(rotated[k]);
        }
    }
    return PhotonCountDistribution::from_map(std::move(probs));
}

double UniversalityReport::max_deviation() const {
    return std::max({f_clones_deviation, f_opt_deviation, f_rand_deviation,
                     n_all_deviation});
}

UniversalityReport universality_check(const Su2Rotation& rot, const AtomsSimConfig& config) {
    FidelityCurve canonical = simulate_time_series(config);
    PreparedRotatedEnsemble rotated(rotate_initial_photon(rot, config.n_atoms), rot);

    UniversalityReport report;
    auto track = [](double& slot, std::optional<double> lhs, std::optional<double> rhs) {
        if (lhs.has_value() != rhs.has_value()) {
            slot = std::numeric_limits<double>::infinity();
            return;
        }
        if (lhs) slot = std::max(slot, std::abs(*lhs - *rhs));
    };
    for (const FidelityPoint& row : canonical.rows) {
        PhotonCountDistribution dist = rotated.distribution(row.gamma_t);
        MetricReport rotated_metrics = metric_report(dist);
        track(report.f_clones_deviation, row.f_clones, rotated_metrics.f_clones);
        track(report.f_opt_deviation, row.f_opt, rotated_metrics.f_opt);
        track(report.f_rand_deviation, row.f_rand, rotated_metrics.f_rand);
        report.n_all_deviation =
            std::max(report.n_all_deviation, std::abs(row.n_all - rotated_metrics.n_all));
    }
    return report;
}

double pdc_rotated_clone_fidelity(int n_in, int m_out, double tanh_gamma_t,
                                  const Su2Rotation& rot) {
    if (n_in < 1 || m_out < n_in)
        throw std::invalid_argument("pdc_rotated_clone_fidelity: requires M >= N >= 1");
    const int n = n_in, m = m_out;
    const int pairs = m - n; // ladder depth reached by the fixed-M component
    const int cutoff = std::max(pairs, 1);

    // Input photons carry polarization alpha V + beta H; expand over the
    // seeded pair ladders of the two commuting mode pairs.
    const std::complex<double> alpha = rot.a(), beta = rot.b();
    std::vector<Eigen::VectorXcd> chain_v1h2(static_cast<std::size_t>(n) + 1);
    std::vector<Eigen::VectorXcd> chain_h1v2(static_cast<std::size_t>(n) + 1);
    std::vector<std::complex<double>> alpha_pow(static_cast<std::size_t>(n) + 1, 1.0);
    std::vector<std::complex<double>> beta_pow = alpha_pow;
    for (int j = 0; j <= n; ++j) {
        chain_v1h2[j] = squeezed_pair_chain(j, tanh_gamma_t, cutoff, +1);
        chain_h1v2[j] = squeezed_pair_chain(j, tanh_gamma_t, cutoff, -1);
        if (j > 0) {
            alpha_pow[j] = alpha_pow[j - 1] * alpha;
            beta_pow[j] = beta_pow[j - 1] * beta;
        }
    }

    // Fixed-M component: mode-1 occupations (nV1, M - nV1) entangled with
    // mode-2 labels (nV2, nH2) = (l, k), k + l = M - N.
    std::map<std::pair<int, int>, Eigen::VectorXcd> by_mode2;
    for (int k = 0; k <= pairs; ++k) {
        int l = pairs - k;
        auto [it, inserted] = by_mode2.try_emplace({l, k});
        if (inserted) it->second = Eigen::VectorXcd::Zero(m + 1);
        for (int j = 0; j <= n; ++j) {
            std::complex<double> w =
                std::sqrt(binomial_double(static_cast<std::uint32_t>(n),
                                          static_cast<std::uint32_t>(j))) *
                alpha_pow[j] * beta_pow[n - j];
            it->second[k + j] += w * chain_v1h2[j][k] * chain_h1v2[n - j][l];
        }
    }

    // Count photons of the input polarization: rotate mode 1 back and read
    // occupations of V1.
    Eigen::MatrixXcd undo = fock_rotation_matrix(rot.inverse(), m);
    double weight = 0.0, right_photons = 0.0;
    for (const auto& [mode2, amplitudes] : by_mode2) {
        Eigen::VectorXcd rotated = undo * amplitudes;
        for (int n1 = 0; n1 <= m; ++n1) {
            double p = std::norm(rotated[n1]);
            weight += p;
            right_photons += p * n1;
        }
    }
    if (weight <= 0.0)
        throw std::runtime_error("pdc_rotated_clone_fidelity: component has zero weight");
    return right_photons / (weight * m);
}

} // namespace clonesim
