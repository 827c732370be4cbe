#ifndef CLONESIM_SYMMETRY_HPP
#define CLONESIM_SYMMETRY_HPP

#include "clonesim/atoms.hpp"
#include "clonesim/hilbert.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

namespace clonesim {

/// SU(2) transformation of the two field modes,
///   a1+ -> a * a1+ + b * a2+,   a2+ -> -conj(b) * a1+ + conj(a) * a2+,
/// with |a|^2 + |b|^2 = 1 (checked within 1e-12).
class Su2Rotation {
public:
    Su2Rotation(std::complex<double> a, std::complex<double> b);

    static Su2Rotation identity() { return Su2Rotation(1.0, 0.0); }

    std::complex<double> a() const { return a_; }
    std::complex<double> b() const { return b_; }

    Su2Rotation inverse() const { return Su2Rotation(std::conj(a_), -b_); }

private:
    std::complex<double> a_;
    std::complex<double> b_;
};

/// second(first(.)): product of the two mode maps.
Su2Rotation compose(const Su2Rotation& second, const Su2Rotation& first);

/// Reproducible pseudo-random rotations (Haar-like), fixed generator seed.
std::vector<Su2Rotation> seeded_rotations(std::uint32_t seed, int count);

/// Unitary the rotation induces on the two-mode Fock layer with
/// total_photons photons: entry (n1_out, n1_in) maps |n1_in, n-n1_in>
/// to |n1_out, n-n1_out>.
Eigen::MatrixXcd fock_rotation_matrix(const Su2Rotation& rot, int total_photons);

/// Ensemble member whose photon part spans several conserved-charge
/// sectors; the parts of one member are coherent pieces of one pure state.
struct MultiSectorState {
    double weight = 0.0;
    std::vector<std::pair<std::shared_ptr<const Sector>, StateVector>> parts;
};

/// The standard atomic ensemble with the incoming photon prepared in the
/// rotated mode, a * a1+|0> + b * a2+|0>. The atomic mixture is basis
/// independent, so its representatives are unchanged.
std::vector<MultiSectorState> rotate_initial_photon(const Su2Rotation& rot, int n_atoms);

/// Evolves a rotated ensemble and counts photons in the rotated basis
/// (the mode carrying the input photon counts as "right").
class PreparedRotatedEnsemble {
public:
    PreparedRotatedEnsemble(std::vector<MultiSectorState> ensemble, const Su2Rotation& rot);

    PhotonCountDistribution distribution(double gamma_t) const;

private:
    struct Part {
        std::shared_ptr<const Sector> sector;
        Propagator propagator;
        StateVector initial;
    };
    struct Member {
        double weight;
        std::vector<Part> parts;
    };
    std::vector<Member> members_;
    std::vector<Eigen::MatrixXcd> inverse_rotation_by_total_; // index = total photons
};

struct UniversalityReport {
    double f_clones_deviation = 0.0;
    double f_opt_deviation = 0.0;
    double f_rand_deviation = 0.0;
    double n_all_deviation = 0.0;

    double max_deviation() const;
};

/// Runs the time series for the canonical and the rotated input and
/// returns the largest pointwise differences across the grid. Rows where
/// the fidelities are undefined on both sides (gamma_t = 0) are skipped.
UniversalityReport universality_check(const Su2Rotation& rot, const AtomsSimConfig& config);

/// Clone fidelity of the fixed-M component when the input photons carry
/// the rotated polarization and the measurement counts photons of that
/// same polarization. Exact up to rounding: the fixed-M component only
/// involves ladder indices up to M - N, so no truncation enters.
double pdc_rotated_clone_fidelity(int n_in, int m_out, double tanh_gamma_t,
                                  const Su2Rotation& rot);

} // namespace clonesim

#endif
