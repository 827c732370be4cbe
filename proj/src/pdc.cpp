#include "clonesim/pdc.hpp"

#include "clonesim/hilbert.hpp"

#include <cmath>
#include <stdexcept>

namespace clonesim {

namespace {

void check_params(int n_input, double tanh_gamma_t) {
    if (n_input < 0) throw std::invalid_argument("pdc: n_input must be >= 0");
    if (!(tanh_gamma_t >= 0.0) || tanh_gamma_t >= 1.0)
        throw std::invalid_argument("pdc: tanh_gamma_t must lie in [0, 1)");
}

// Smallest index whose normalized ladder term drops below term_eps and
// whose cumulative mass is within tail_eps of 1. The ladder terms
// t_j = G^(2j) C(j+seed, seed) (1-G^2)^(seed+1) sum to exactly 1; the
// cumulative stop is clamped above double rounding noise.
int ladder_cutoff(int seed, double tanh_gamma_t, double term_eps, double tail_eps) {
    double g2 = tanh_gamma_t * tanh_gamma_t;
    double term = std::pow(1.0 - g2, seed + 1);
    double cumulative = term;
    double tail_floor = std::max(tail_eps, 1e-13);
    int j = 0;
    while (term >= term_eps || 1.0 - cumulative >= tail_floor) {
        ++j;
        term *= g2 * (static_cast<double>(j + seed) / j);
        cumulative += term;
        if (j > 1000000)
            throw std::runtime_error("pdc: cutoff selection did not converge");
    }
    return std::max(j, 1);
}

} // namespace

PdcParameters PdcParameters::with_auto_cutoff(int n_input, double tanh_gamma_t,
                                              double tail_eps) {
    check_params(n_input, tanh_gamma_t);
    int ck = ladder_cutoff(n_input, tanh_gamma_t, tail_eps, 10.0 * tail_eps);
    int cl = ladder_cutoff(0, tanh_gamma_t, tail_eps, 10.0 * tail_eps);
    return PdcParameters{n_input, tanh_gamma_t, std::max(ck, cl)};
}

PdcState::PdcState(int n_input, double tanh_gamma_t, Eigen::MatrixXcd grid)
    : n_input_(n_input), tanh_gamma_t_(tanh_gamma_t), grid_(std::move(grid)) {
    if (grid_.rows() != grid_.cols() || grid_.rows() < 2)
        throw std::invalid_argument("PdcState: grid must be square with cutoff >= 1");
}

double PdcState::normalization() const {
    double g2 = tanh_gamma_t_ * tanh_gamma_t_;
    return std::pow(1.0 - g2, 0.5 * (n_input_ + 2));
}

std::complex<double> PdcState::amplitude(int nv1, int nh1, int nv2, int nh2) const {
    if (nh1 != nv2) return 0.0;
    if (nv1 - nh2 != n_input_) return 0.0;
    if (nh2 < 0 || nh2 > cutoff() || nh1 < 0 || nh1 > cutoff()) return 0.0;
    return grid_(nh2, nh1);
}

std::complex<double> overlap(const PdcState& a, const PdcState& b) {
    if (a.n_input() != b.n_input())
        throw std::invalid_argument("overlap: states have different photon inputs");
    int n = std::min(a.cutoff(), b.cutoff()) + 1;
    return (a.grid().topLeftCorner(n, n).conjugate().cwiseProduct(
                b.grid().topLeftCorner(n, n)))
        .sum();
}

Eigen::VectorXcd squeezed_pair_chain(int seed, double tanh_gamma_t, int cutoff,
                                     int coupling_sign) {
    check_params(seed, tanh_gamma_t);
    const std::complex<double> step =
        std::complex<double>(0.0, -coupling_sign) * tanh_gamma_t;
    const double g2 = tanh_gamma_t * tanh_gamma_t;
    Eigen::VectorXcd amps(cutoff + 1);
    std::complex<double> phase = std::pow(1.0 - g2, 0.5 * (seed + 1));
    double binom = 1.0; // C(j+seed, seed), updated multiplicatively
    for (int j = 0; j <= cutoff; ++j) {
        amps[j] = phase * std::sqrt(binom);
        phase *= step;
        binom *= static_cast<double>(j + 1 + seed) / (j + 1);
    }
    return amps;
}

Eigen::VectorXcd numeric_pair_chain(int seed, double gamma_t, int cutoff,
                                    int coupling_sign) {
    if (seed < 0 || cutoff < 1)
        throw std::invalid_argument("numeric_pair_chain: bad seed or cutoff");
    HermitianOperator h(cutoff + 1);
    for (int j = 0; j < cutoff; ++j) {
        double elem = coupling_sign *
                      std::sqrt(static_cast<double>(j + 1 + seed) * (j + 1));
        h.add_pair(j + 1, j, elem);
    }
    StateVector start = StateVector::Zero(cutoff + 1);
    start[0] = 1.0;
    return evolve_unitary(h, gamma_t, start);
}

PdcState pdc_final_state_analytic(const PdcParameters& params) {
    check_params(params.n_input, params.tanh_gamma_t);
    if (params.cutoff < 1)
        throw std::invalid_argument("pdc_final_state_analytic: cutoff must be >= 1");
    Eigen::VectorXcd u =
        squeezed_pair_chain(params.n_input, params.tanh_gamma_t, params.cutoff, +1);
    Eigen::VectorXcd v = squeezed_pair_chain(0, params.tanh_gamma_t, params.cutoff, -1);
    return PdcState(params.n_input, params.tanh_gamma_t, u * v.transpose());
}

PdcState pdc_evolve_numeric(int n_input, double gamma_t, int cutoff) {
    if (n_input < 0 || cutoff < 1)
        throw std::invalid_argument("pdc_evolve_numeric: bad n_input or cutoff");
    if (gamma_t < 0.0)
        throw std::invalid_argument("pdc_evolve_numeric: gamma_t must be >= 0");
    Eigen::VectorXcd u = numeric_pair_chain(n_input, gamma_t, cutoff, +1);
    Eigen::VectorXcd v = numeric_pair_chain(0, gamma_t, cutoff, -1);
    constexpr double kBoundaryTolerance = 1e-10;
    if (std::abs(u[cutoff]) > kBoundaryTolerance || std::abs(v[cutoff]) > kBoundaryTolerance)
        throw CutoffTooSmallError("pdc_evolve_numeric: amplitude reached the grid edge");
    return PdcState(n_input, std::tanh(gamma_t), u * v.transpose());
}

FixedMComponent project_fixed_m(const PdcState& state, int m_total) {
    const int n = state.n_input();
    if (m_total < n)
        throw std::invalid_argument("project_fixed_m: component empty for M < N");
    if (m_total - n > state.cutoff())
        throw std::invalid_argument("project_fixed_m: M - N exceeds the state cutoff");
    FixedMComponent component;
    component.n_input = n;
    component.m_total = m_total;
    component.amplitudes = Eigen::VectorXcd(m_total - n + 1);
    for (int l = 0; l <= m_total - n; ++l)
        component.amplitudes[l] = state.grid()(m_total - n - l, l);
    component.weight = component.amplitudes.squaredNorm();
    component.normalized = component.weight > 0.0
                               ? Eigen::VectorXcd(component.amplitudes /
                                                  std::sqrt(component.weight))
                               : Eigen::VectorXcd::Zero(m_total - n + 1).eval();
    return component;
}

std::vector<double> fixed_m_weights(const PdcState& state, int m_max) {
    if (m_max < state.n_input())
        throw std::invalid_argument("fixed_m_weights: m_max below photon input");
    std::vector<double> weights;
    weights.reserve(static_cast<std::size_t>(m_max - state.n_input()) + 1);
    for (int m = state.n_input(); m <= m_max; ++m)
        weights.push_back(project_fixed_m(state, m).weight);
    return weights;
}

Rational clone_fidelity_pdc(int n_in, int m_out) {
    if (n_in < 1 || m_out < n_in)
        throw std::invalid_argument("clone_fidelity_pdc: requires M >= N >= 1");
    const auto n = static_cast<std::uint32_t>(n_in);
    const auto m = static_cast<std::uint32_t>(m_out);

    BigNat numerator, weight_sum;
    for (std::uint32_t l = 0; l <= m - n; ++l) {
        BigNat c = binomial(m - l, n);
        weight_sum += c;
        numerator += c.mul_small(m - l);
    }
    BigNat denominator = weight_sum;
    denominator.mul_small(m);
    Rational by_summation(BigInt(numerator), denominator);

    // The summation collapses through sum_{k=N}^{M} C(k,N) = C(M+1, N+1);
    // check the identity and the closed form before returning.
    if (weight_sum != binomial(m + 1, n + 1))
        throw std::logic_error("clone_fidelity_pdc: binomial identity violated");
    Rational closed_form(static_cast<std::int64_t>(n) * m + n + m,
                         static_cast<std::int64_t>(m) * (n + 2));
    if (by_summation != closed_form)
        throw std::logic_error("clone_fidelity_pdc: summation disagrees with closed form");
    return by_summation;
}

Rational anticlone_fidelity_pdc(int n_in, int m_out) {
    if (n_in < 1 || m_out <= n_in)
        throw std::invalid_argument("anticlone_fidelity_pdc: no anti-clones unless M > N >= 1");
    const auto n = static_cast<std::uint32_t>(n_in);
    const auto m = static_cast<std::uint32_t>(m_out);

    BigNat numerator, weight_sum;
    for (std::uint32_t l = 0; l <= m - n; ++l) {
        BigNat c = binomial(m - l, n);
        weight_sum += c;
        numerator += c.mul_small(m - n - l);
    }
    BigNat denominator = weight_sum;
    denominator.mul_small(m - n);
    return Rational(BigInt(numerator), denominator);
}

} // namespace clonesim
