#ifndef CLONESIM_HILBERT_HPP
#define CLONESIM_HILBERT_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace clonesim {

/// Internal level of one three-level emitter: a ground level and two
/// degenerate excited levels coupled to field modes 1 and 2.
enum class AtomLevel : std::uint8_t { G = 0, E1 = 1, E2 = 2 };

using AtomConfig = std::vector<AtomLevel>;

int count_e1(const AtomConfig& atoms);
int count_e2(const AtomConfig& atoms);

/// Base-3 encoding of the level sequence, first atom most significant.
/// Encodes lexicographic order (G < E1 < E2) as integer order.
std::uint32_t atom_code(const AtomConfig& atoms);

/// One basis element of the joint Hilbert space: an atom configuration
/// together with the photon numbers of the two field modes.
struct FockBasisState {
    AtomConfig atoms;
    int photons1 = 0;
    int photons2 = 0;

    int charge1() const { return photons1 + count_e1(atoms); }
    int charge2() const { return photons2 + count_e2(atoms); }

    bool operator==(const FockBasisState& other) const = default;
};

/// Invariant subspace labeled by the conserved charges
///   N1 = photons in mode 1 + atoms in E1,
///   N2 = photons in mode 2 + atoms in E2.
/// The basis is exhaustive, duplicate free, and ordered lexicographically
/// by atom levels (G < E1 < E2); photon numbers are forced by the charges.
struct Sector {
    int n_atoms = 0;
    int charge1 = 0;
    int charge2 = 0;
    std::vector<FockBasisState> basis;

    std::size_t size() const { return basis.size(); }
    std::optional<std::size_t> index_of(const FockBasisState& state) const;

private:
    friend Sector enumerate_sector(int, int, int);
    std::vector<std::int32_t> index_by_code_; // 3^n_atoms entries, -1 = absent
};

/// Enumerates the full basis of the (N1, N2) sector. Negative arguments
/// are rejected.
Sector enumerate_sector(int n_atoms, int n1, int n2);

using StateVector = Eigen::VectorXcd;

/// Dense Hermitian matrix whose conjugate symmetry holds exactly by
/// construction: entries are only written in (i,j)/(j,i) pairs.
class HermitianOperator {
public:
    explicit HermitianOperator(Eigen::Index dim)
        : mat_(Eigen::MatrixXcd::Zero(dim, dim)) {}

    Eigen::Index dim() const { return mat_.rows(); }
    const Eigen::MatrixXcd& matrix() const { return mat_; }

    /// Adds value at (row, col) and its conjugate at (col, row).
    /// A diagonal element must be real.
    void add_pair(Eigen::Index row, Eigen::Index col, std::complex<double> value);

private:
    Eigen::MatrixXcd mat_;
};

/// exp(-iHt) applied through one eigendecomposition, reusable across
/// many time points.
class Propagator {
public:
    explicit Propagator(const HermitianOperator& hamiltonian);

    Eigen::Index dim() const { return eigenvectors_.rows(); }
    StateVector apply(double t, const StateVector& psi) const;

private:
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXcd eigenvectors_;
};

/// One-shot exp(-iHt) psi. H is dimensionless (coupling absorbed into t).
StateVector evolve_unitary(const HermitianOperator& hamiltonian, double t,
                           const StateVector& psi);

} // namespace clonesim

#endif
