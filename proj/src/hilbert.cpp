#include "clonesim/hilbert.hpp"

#include <cmath>
#include <stdexcept>

namespace clonesim {

int count_e1(const AtomConfig& atoms) {
    int n = 0;
    for (AtomLevel level : atoms) n += (level == AtomLevel::E1);
    return n;
}

int count_e2(const AtomConfig& atoms) {
    int n = 0;
    for (AtomLevel level : atoms) n += (level == AtomLevel::E2);
    return n;
}

std::uint32_t atom_code(const AtomConfig& atoms) {
    std::uint32_t code = 0;
    for (AtomLevel level : atoms) code = code * 3 + static_cast<std::uint32_t>(level);
    return code;
}

std::optional<std::size_t> Sector::index_of(const FockBasisState& state) const {
    if (static_cast<int>(state.atoms.size()) != n_atoms) return std::nullopt;
    if (state.charge1() != charge1 || state.charge2() != charge2) return std::nullopt;
    std::int32_t idx = index_by_code_[atom_code(state.atoms)];
    if (idx < 0) return std::nullopt;
    return static_cast<std::size_t>(idx);
}

Sector enumerate_sector(int n_atoms, int n1, int n2) {
    if (n_atoms < 0 || n1 < 0 || n2 < 0)
        throw std::invalid_argument("enumerate_sector: arguments must be non-negative");
    if (n_atoms > 12)
        throw std::invalid_argument("enumerate_sector: atom count too large");

    Sector sector;
    sector.n_atoms = n_atoms;
    sector.charge1 = n1;
    sector.charge2 = n2;

    std::uint64_t n_codes = 1;
    for (int i = 0; i < n_atoms; ++i) n_codes *= 3;
    sector.index_by_code_.assign(n_codes, -1);

    // Walk all 3^n configurations in lexicographic (= code) order; the
    // photon numbers are forced by the charges.
    AtomConfig atoms(static_cast<std::size_t>(n_atoms), AtomLevel::G);
    for (std::uint64_t code = 0; code < n_codes; ++code) {
        std::uint64_t rest = code;
        int ne1 = 0, ne2 = 0;
        for (int i = n_atoms - 1; i >= 0; --i) {
            auto digit = static_cast<std::uint8_t>(rest % 3);
            rest /= 3;
            atoms[static_cast<std::size_t>(i)] = static_cast<AtomLevel>(digit);
            ne1 += (digit == 1);
            ne2 += (digit == 2);
        }
        int k = n1 - ne1;
        int l = n2 - ne2;
        if (k < 0 || l < 0) continue;
        sector.index_by_code_[code] = static_cast<std::int32_t>(sector.basis.size());
        sector.basis.push_back(FockBasisState{atoms, k, l});
    }
    return sector;
}

void HermitianOperator::add_pair(Eigen::Index row, Eigen::Index col,
                                 std::complex<double> value) {
    if (row < 0 || col < 0 || row >= dim() || col >= dim())
        throw std::invalid_argument("HermitianOperator::add_pair: index out of range");
    if (row == col) {
        if (value.imag() != 0.0)
            throw std::invalid_argument("HermitianOperator::add_pair: diagonal must be real");
        mat_(row, col) += value.real();
        return;
    }
    mat_(row, col) += value;
    mat_(col, row) += std::conj(value);
}

Propagator::Propagator(const HermitianOperator& hamiltonian) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian.matrix());
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("Propagator: eigendecomposition failed");
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
}

StateVector Propagator::apply(double t, const StateVector& psi) const {
    if (psi.size() != dim())
        throw std::invalid_argument("Propagator::apply: dimension mismatch");
    Eigen::VectorXcd coeffs = eigenvectors_.adjoint() * psi;
    for (Eigen::Index i = 0; i < coeffs.size(); ++i)
        coeffs[i] *= std::polar(1.0, -eigenvalues_[i] * t);
    return eigenvectors_ * coeffs;
}

StateVector evolve_unitary(const HermitianOperator& hamiltonian, double t,
                           const StateVector& psi) {
    return Propagator(hamiltonian).apply(t, psi);
}

} // namespace clonesim
