#ifndef CLONESIM_PDC_HPP
#define CLONESIM_PDC_HPP

#include "clonesim/rational.hpp"

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

namespace clonesim {

/// Raised by the numeric evolution when amplitude reaches the edge of the
/// truncated Fock grid.
struct CutoffTooSmallError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Down-conversion run parameters. The interaction strength enters only
/// through tanh_gamma_t = tanh(gamma * t) in [0, 1).
struct PdcParameters {
    int n_input = 0;          // N identical V-polarized photons in mode 1
    double tanh_gamma_t = 0.0;
    int cutoff = 1;           // maximum pair index kept in each ladder

    /// Picks the smallest cutoff whose omitted tail keeps the squared-norm
    /// deficit of the truncated state below ~1e-12 (tail_eps tightens both
    /// the per-term and the cumulative stop).
    static PdcParameters with_auto_cutoff(int n_input, double tanh_gamma_t,
                                          double tail_eps = 1e-14);
};

/// Four-mode state of the two polarization/direction mode pairs. Pair
/// creation confines the amplitude to occupations (k+N, l, l, k) in mode
/// order (V1, H1, V2, H2); the state is stored on that (k, l) grid.
class PdcState {
public:
    PdcState(int n_input, double tanh_gamma_t, Eigen::MatrixXcd grid);

    int n_input() const { return n_input_; }
    double tanh_gamma_t() const { return tanh_gamma_t_; }
    int cutoff() const { return static_cast<int>(grid_.rows()) - 1; }

    /// Normalization constant of the expansion, (1 - G^2)^((N+2)/2).
    double normalization() const;

    /// grid(k, l) = amplitude of |k+N>_V1 |l>_H1 |l>_V2 |k>_H2.
    const Eigen::MatrixXcd& grid() const { return grid_; }

    /// Amplitude of an arbitrary four-mode occupation; zero off-structure.
    std::complex<double> amplitude(int nv1, int nh1, int nv2, int nh2) const;

    double squared_norm() const { return grid_.squaredNorm(); }
    double norm_deficit() const { return 1.0 - squared_norm(); }

private:
    int n_input_;
    double tanh_gamma_t_;
    Eigen::MatrixXcd grid_;
};

/// <a|b> over the common grid; states must share n_input.
std::complex<double> overlap(const PdcState& a, const PdcState& b);

/// Closed-form amplitudes of one squeezed mode pair seeded with `seed`
/// photons in its first mode: entry j is the amplitude of |seed+j, j>.
/// coupling_sign is the sign of the pair-creation term for this pair.
Eigen::VectorXcd squeezed_pair_chain(int seed, double tanh_gamma_t, int cutoff,
                                     int coupling_sign);

/// Same ladder computed by exponentiating the pair Hamiltonian on the
/// truncated ladder (independent of the closed form).
Eigen::VectorXcd numeric_pair_chain(int seed, double gamma_t, int cutoff,
                                    int coupling_sign);

/// Final state from the closed-form expansion with normalization
/// K = (1 - G^2)^((N+2)/2), G = tanh_gamma_t.
PdcState pdc_final_state_analytic(const PdcParameters& params);

/// Final state from direct exponentiation of the pair-creation Hamiltonian
/// on the truncated grid; the two mode pairs commute, so each ladder is
/// exponentiated by eigendecomposition and the grid is their product.
/// Fails with CutoffTooSmallError when the edge amplitude exceeds 1e-10.
PdcState pdc_evolve_numeric(int n_input, double gamma_t, int cutoff);

/// Component of the state with exactly m_total photons in spatial mode 1.
/// Entry l of `amplitudes` belongs to |m_total-l, l, l, m_total-N-l>.
struct FixedMComponent {
    int n_input = 0;
    int m_total = 0;
    Eigen::VectorXcd amplitudes;  // unnormalized, straight off the state
    Eigen::VectorXcd normalized;  // unit norm (zero vector if weight is 0)
    double weight = 0.0;          // probability of finding this component
};

FixedMComponent project_fixed_m(const PdcState& state, int m_total);

/// Probability weights of the fixed-M components for M = N .. m_max.
std::vector<double> fixed_m_weights(const PdcState& state, int m_max);

/// Exact fidelity of the M clones in mode 1 given N inputs, by explicit
/// summation over the fixed-M expansion; equals (NM+N+M)/(M(N+2)), which
/// is verified internally before returning. Requires M >= N >= 1.
Rational clone_fidelity_pdc(int n_in, int m_out);

/// Exact fidelity of the M-N flipped outputs in spatial mode 2 (the
/// universal-NOT output), by explicit summation. Requires M > N >= 1.
Rational anticlone_fidelity_pdc(int n_in, int m_out);

} // namespace clonesim

#endif
