#include "clonesim/verify.hpp"

#include "clonesim/atoms.hpp"
#include "clonesim/hilbert.hpp"
#include "clonesim/metrics.hpp"
#include "clonesim/pdc.hpp"
#include "clonesim/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace clonesim {

namespace {

struct Check {
    std::string name;
    std::function<CheckResult(const VerifyOptions&)> run;
};

CheckResult make_result(std::string name, double deviation, double threshold,
                        std::string detail = {}) {
    CheckResult result;
    result.name = std::move(name);
    result.deviation = deviation;
    result.threshold = threshold;
    result.passed = deviation <= threshold;
    result.detail = std::move(detail);
    return result;
}

double uniform01(std::mt19937& rng) { return rng() * (1.0 / 4294967296.0); }

// Every (atoms, k, l) with the right charges, found by scanning the raw
// product space instead of forcing photon numbers.
std::set<std::pair<std::uint32_t, std::pair<int, int>>>
brute_force_sector(int n_atoms, int n1, int n2) {
    std::set<std::pair<std::uint32_t, std::pair<int, int>>> states;
    std::uint64_t n_codes = 1;
    for (int i = 0; i < n_atoms; ++i) n_codes *= 3;
    for (std::uint64_t code = 0; code < n_codes; ++code) {
        AtomConfig atoms(static_cast<std::size_t>(n_atoms));
        std::uint64_t rest = code;
        for (int i = n_atoms - 1; i >= 0; --i) {
            atoms[static_cast<std::size_t>(i)] = static_cast<AtomLevel>(rest % 3);
            rest /= 3;
        }
        for (int k = 0; k <= n1; ++k) {
            for (int l = 0; l <= n2; ++l) {
                FockBasisState state{atoms, k, l};
                if (state.charge1() == n1 && state.charge2() == n2)
                    states.insert({atom_code(atoms), {k, l}});
            }
        }
    }
    return states;
}

CheckResult check_sector_oracle(const VerifyOptions& options) {
    int mismatches = 0;
    int sectors = 0;
    for (int n = 0; n <= std::min(options.max_atoms, 3); ++n) {
        for (int n1 = 0; n1 <= n + 1; ++n1) {
            for (int n2 = 0; n1 + n2 <= n + 1; ++n2) {
                Sector sector = enumerate_sector(n, n1, n2);
                auto expected = brute_force_sector(n, n1, n2);
                ++sectors;
                std::set<std::pair<std::uint32_t, std::pair<int, int>>> got;
                for (const FockBasisState& state : sector.basis)
                    got.insert({atom_code(state.atoms), {state.photons1, state.photons2}});
                if (got != expected || got.size() != sector.size()) ++mismatches;
            }
        }
    }
    std::ostringstream detail;
    detail << sectors << " sectors compared against the product-space filter";
    return make_result("sector-oracle", mismatches, 0.0, detail.str());
}

CheckResult check_unitarity(const VerifyOptions& options) {
    std::mt19937 rng(options.seed);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        int dim = 2 + static_cast<int>(rng() % 49); // up to 50
        HermitianOperator h(dim);
        for (int i = 0; i < dim; ++i) {
            h.add_pair(i, i, 2.0 * uniform01(rng) - 1.0);
            for (int j = i + 1; j < dim; ++j)
                h.add_pair(i, j, std::complex<double>(2.0 * uniform01(rng) - 1.0,
                                                      2.0 * uniform01(rng) - 1.0));
        }
        StateVector psi(dim);
        for (int i = 0; i < dim; ++i)
            psi[i] = std::complex<double>(2.0 * uniform01(rng) - 1.0,
                                          2.0 * uniform01(rng) - 1.0);
        psi.normalize();
        double t = 3.0 * uniform01(rng);
        worst = std::max(worst, std::abs(evolve_unitary(h, t, psi).norm() - 1.0));
    }
    return make_result("unitarity", worst, 1e-10, "100 random Hermitian evolutions");
}

CheckResult check_normalization(const VerifyOptions& options) {
    double worst = 0.0;
    for (int n = 1; n <= options.max_atoms; ++n) {
        PreparedEnsemble prepared(initial_ensemble(n));
        for (int step = 0; step <= 40; ++step) {
            double t = 2.0 * step / 40.0;
            worst = std::max(worst, std::abs(prepared.distribution(t).total() - 1.0));
        }
    }
    return make_result("normalization", worst, 1e-10, "41-point grid on [0, 2]");
}

CheckResult check_vacuum_zero(const VerifyOptions& options) {
    double worst = 0.0;
    for (int n = 1; n <= options.max_atoms; ++n) {
        PreparedEnsemble prepared(initial_ensemble(n));
        for (int step = 0; step <= 40; ++step) {
            double t = 2.0 * step / 40.0;
            worst = std::max(worst, prepared.distribution(t).probability(0, 0));
        }
    }
    return make_result("vacuum-zero", worst, 1e-12, "p(0,0) across the grid");
}

CheckResult check_bound_ordering(const VerifyOptions& options) {
    // f_clones <= f_opt holds across the whole window. The lower bound
    // f_rand <= f_clones genuinely fails once the stimulated mode starts
    // to reabsorb (near gamma_t ~ 1.02 for 2..6 emitters, cross-checked
    // against full brute-force evolution), so it is asserted on (0, 1].
    double worst = 0.0;
    for (int n = 1; n <= options.max_atoms; ++n) {
        AtomsSimConfig config{n, 2.0, 40};
        FidelityCurve curve = simulate_time_series(config);
        for (const FidelityPoint& row : curve.rows) {
            if (!row.f_clones) continue;
            worst = std::max(worst, *row.f_clones - *row.f_opt);
            if (row.gamma_t <= 1.0)
                worst = std::max(worst, *row.f_rand - *row.f_clones);
        }
    }
    return make_result("bound-ordering", worst, 1e-9,
                       "f_clones <= f_opt on (0,2], f_rand <= f_clones on (0,1]");
}

// All 2^n pure assignments of the excited levels, no symmetry reduction.
std::vector<WeightedPureState> exhaustive_ensemble(int n_atoms) {
    std::vector<WeightedPureState> ensemble;
    double weight = std::ldexp(1.0, -n_atoms);
    for (std::uint32_t mask = 0; mask < (1u << n_atoms); ++mask) {
        AtomConfig atoms(static_cast<std::size_t>(n_atoms));
        for (int i = 0; i < n_atoms; ++i)
            atoms[static_cast<std::size_t>(i)] =
                (mask >> i) & 1u ? AtomLevel::E1 : AtomLevel::E2;
        auto sector = std::make_shared<Sector>(
            enumerate_sector(n_atoms, count_e1(atoms) + 1, count_e2(atoms)));
        auto idx = sector->index_of(FockBasisState{atoms, 1, 0});
        if (!idx) throw std::logic_error("exhaustive_ensemble: start state missing");
        StateVector psi = StateVector::Zero(static_cast<Eigen::Index>(sector->size()));
        psi[static_cast<Eigen::Index>(*idx)] = 1.0;
        ensemble.push_back(WeightedPureState{weight, std::move(sector), std::move(psi)});
    }
    return ensemble;
}

CheckResult check_ensemble_oracle(const VerifyOptions& options) {
    double worst = 0.0;
    for (int n = 1; n <= std::min(options.max_atoms, 3); ++n) {
        PreparedEnsemble reduced(initial_ensemble(n));
        PreparedEnsemble full(exhaustive_ensemble(n));
        for (double t : {0.3, 1.0, 2.0}) {
            PhotonCountDistribution a = reduced.distribution(t);
            PhotonCountDistribution b = full.distribution(t);
            for (const auto& [kl, p] : a.entries())
                worst = std::max(worst, std::abs(p - b.probability(kl.first, kl.second)));
            for (const auto& [kl, p] : b.entries())
                worst = std::max(worst, std::abs(p - a.probability(kl.first, kl.second)));
        }
    }
    return make_result("ensemble-oracle", worst, 1e-10,
                       "representative-per-m vs all 2^n configurations");
}

CheckResult check_pdc_overlap(const VerifyOptions&) {
    double worst_overlap_gap = 0.0;
    double worst_deficit = 0.0;
    for (int n : {0, 1, 2, 3}) {
        for (double gamma_t : {0.1, 0.3, 0.6, 1.0}) {
            double gamma = std::tanh(gamma_t);
            PdcParameters params = PdcParameters::with_auto_cutoff(n, gamma);
            PdcState analytic = pdc_final_state_analytic(params);
            worst_deficit = std::max(worst_deficit, std::abs(analytic.norm_deficit()));
            int numeric_cutoff =
                PdcParameters::with_auto_cutoff(n, gamma, 1e-22).cutoff;
            PdcState numeric = pdc_evolve_numeric(n, gamma_t, numeric_cutoff);
            worst_overlap_gap =
                std::max(worst_overlap_gap, 1.0 - std::abs(overlap(analytic, numeric)));
        }
    }
    std::ostringstream detail;
    detail << "norm deficit worst " << worst_deficit;
    if (worst_deficit > 1e-12)
        return make_result("pdc-overlap", 1.0, 1e-8, "norm deficit above 1e-12");
    return make_result("pdc-overlap", worst_overlap_gap, 1e-8, detail.str());
}

CheckResult check_pdc_identity(const VerifyOptions&) {
    int failures = 0;
    int cases = 0;
    for (int n = 1; n <= 10; ++n) {
        for (int m = n; m <= n + 10; ++m) {
            ++cases;
            Rational expected(static_cast<std::int64_t>(n) * m + n + m,
                              static_cast<std::int64_t>(m) * (n + 2));
            if (clone_fidelity_pdc(n, m) != expected) ++failures;
            if (clone_fidelity_pdc(n, m) != optimal_fidelity(n, m)) ++failures;
        }
    }
    std::ostringstream detail;
    detail << cases << " (N, M) pairs, exact rational comparison";
    return make_result("pdc-identity", failures, 0.0, detail.str());
}

CheckResult check_anticlone_value(const VerifyOptions&) {
    int failures = 0;
    int cases = 0;
    for (int n = 1; n <= 6; ++n) {
        for (int m = n + 1; m <= n + 8; ++m) {
            ++cases;
            if (anticlone_fidelity_pdc(n, m) != Rational(n + 1, n + 2)) ++failures;
        }
    }
    std::ostringstream detail;
    detail << cases << " cases against (N+1)/(N+2)";
    return make_result("anticlone-value", failures, 0.0, detail.str());
}

CheckResult check_universality(const VerifyOptions& options) {
    double worst = 0.0;
    auto rotations = seeded_rotations(options.seed, 5);
    for (int n = 1; n <= std::min(options.max_atoms, 3); ++n) {
        AtomsSimConfig config{n, 2.0, 20};
        for (const Su2Rotation& rot : rotations)
            worst = std::max(worst, universality_check(rot, config).max_deviation());
    }
    return make_result("universality", worst, 1e-9,
                       "5 seeded rotations, all metric curves");
}

CheckResult check_pdc_universality(const VerifyOptions& options) {
    double worst = 0.0;
    auto rotations = seeded_rotations(options.seed + 1, 5);
    for (const Su2Rotation& rot : rotations) {
        for (auto [n, m] : {std::pair{1, 2}, {1, 4}, {2, 3}, {3, 5}}) {
            for (double gamma : {0.3, 0.6}) {
                double expected = clone_fidelity_pdc(n, m).to_double();
                double rotated = pdc_rotated_clone_fidelity(n, m, gamma, rot);
                worst = std::max(worst, std::abs(rotated - expected));
            }
        }
    }
    return make_result("pdc-universality", worst, 1e-12,
                       "rotated input and measurement, fixed-M fidelity");
}

const std::vector<Check>& registry() {
    static const std::vector<Check> checks = {
        {"sector-oracle", check_sector_oracle},
        {"unitarity", check_unitarity},
        {"normalization", check_normalization},
        {"vacuum-zero", check_vacuum_zero},
        {"bound-ordering", check_bound_ordering},
        {"ensemble-oracle", check_ensemble_oracle},
        {"pdc-overlap", check_pdc_overlap},
        {"pdc-identity", check_pdc_identity},
        {"anticlone-value", check_anticlone_value},
        {"universality", check_universality},
        {"pdc-universality", check_pdc_universality},
    };
    return checks;
}

} // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> names;
    for (const Check& check : registry()) names.push_back(check.name);
    return names;
}

std::vector<CheckResult> run_checks(const VerifyOptions& options) {
    if (options.max_atoms < 1)
        throw std::invalid_argument("run_checks: max_atoms must be >= 1");
    for (const std::string& name : options.only) {
        bool known = false;
        for (const Check& check : registry()) known = known || check.name == name;
        if (!known) throw std::invalid_argument("run_checks: unknown check " + name);
    }
    std::vector<CheckResult> results;
    for (const Check& check : registry()) {
        if (!options.only.empty() &&
            std::find(options.only.begin(), options.only.end(), check.name) ==
                options.only.end())
            continue;
        results.push_back(check.run(options));
    }
    return results;
}

} // namespace clonesim
