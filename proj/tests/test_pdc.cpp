#include "clonesim/pdc.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace clonesim;

TEST_SUITE("pdc") {

TEST_CASE("vacuum input gives the squeezed-vacuum product normalization") {
    PdcState state = pdc_final_state_analytic({0, 0.5, 30});
    // K = (1 - 0.25)^1
    CHECK(std::abs(state.amplitude(0, 0, 0, 0) - 0.75) < 1e-14);
    CHECK(state.normalization() == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(std::abs(state.norm_deficit()) < 1e-12);
}

TEST_CASE("no interaction leaves the bare input photons") {
    for (int n : {0, 1, 3}) {
        PdcState state = pdc_final_state_analytic({n, 0.0, 5});
        CHECK(std::abs(state.amplitude(n, 0, 0, 0) - 1.0) < 1e-14);
        CHECK(std::abs(state.squared_norm() - 1.0) < 1e-14);
    }
}

TEST_CASE("one input photon, moderate squeezing: unit norm at cutoff 40") {
    PdcState state = pdc_final_state_analytic({1, 0.3, 40});
    CHECK(std::abs(state.squared_norm() - 1.0) < 1e-12);
}

TEST_CASE("auto cutoff keeps the norm deficit below 1e-12") {
    for (int n : {0, 1, 2, 3}) {
        for (double gamma_t : {0.1, 0.6, 1.0, 1.5}) {
            PdcParameters params = PdcParameters::with_auto_cutoff(n, std::tanh(gamma_t));
            PdcState state = pdc_final_state_analytic(params);
            CHECK(std::abs(state.norm_deficit()) < 1e-12);
        }
    }
}

TEST_CASE("amplitudes only live on the pair-structure occupations") {
    PdcState state = pdc_final_state_analytic({2, 0.4, 20});
    CHECK(state.amplitude(3, 0, 0, 1) != std::complex<double>(0.0));
    CHECK(state.amplitude(3, 0, 0, 2) == std::complex<double>(0.0)); // nV1-nH2 != N
    CHECK(state.amplitude(3, 1, 0, 1) == std::complex<double>(0.0)); // nH1 != nV2
    CHECK(state.amplitude(2, 5, 5, 0) != std::complex<double>(0.0));
}

TEST_CASE("squeezing parameter outside [0,1) is rejected") {
    CHECK_THROWS_AS(pdc_final_state_analytic({1, 1.0, 10}), std::invalid_argument);
    CHECK_THROWS_AS(pdc_final_state_analytic({1, -0.1, 10}), std::invalid_argument);
    CHECK_THROWS_AS(PdcParameters::with_auto_cutoff(1, 1.2), std::invalid_argument);
}

TEST_CASE("numeric evolution at zero time is the input state") {
    PdcState state = pdc_evolve_numeric(2, 0.0, 10);
    CHECK(std::abs(state.amplitude(2, 0, 0, 0) - 1.0) < 1e-14);
    CHECK(std::abs(state.squared_norm() - 1.0) < 1e-13);
}

TEST_CASE("numeric evolution matches the closed form") {
    PdcState analytic = pdc_final_state_analytic({1, std::tanh(0.3), 40});
    PdcState numeric = pdc_evolve_numeric(1, 0.3, 40);
    CHECK(std::abs(overlap(analytic, numeric)) >= 1.0 - 1e-8);
}

TEST_CASE("oracle agreement across inputs and times") {
    for (int n : {0, 1, 2, 3}) {
        for (double gamma_t : {0.1, 0.3, 0.6, 1.0}) {
            double gamma = std::tanh(gamma_t);
            PdcState analytic =
                pdc_final_state_analytic(PdcParameters::with_auto_cutoff(n, gamma));
            int cutoff = PdcParameters::with_auto_cutoff(n, gamma, 1e-22).cutoff;
            PdcState numeric = pdc_evolve_numeric(n, gamma_t, cutoff);
            CHECK(std::abs(overlap(analytic, numeric)) >= 1.0 - 1e-8);
        }
    }
}

TEST_CASE("too small a grid trips the boundary check") {
    CHECK_THROWS_AS(pdc_evolve_numeric(1, 1.5, 8), CutoffTooSmallError);
}

TEST_CASE("seeded ladders agree between closed form and exponentiation") {
    for (int seed : {0, 1, 2, 4}) {
        for (int sign : {+1, -1}) {
            double gamma_t = 0.45;
            Eigen::VectorXcd closed =
                squeezed_pair_chain(seed, std::tanh(gamma_t), 40, sign);
            Eigen::VectorXcd numeric = numeric_pair_chain(seed, gamma_t, 40, sign);
            CHECK((closed - numeric).norm() < 1e-10);
        }
    }
}

TEST_CASE("fixed-M projection at M = N is the bare input term") {
    PdcState state = pdc_final_state_analytic({2, 0.5, 20});
    FixedMComponent component = project_fixed_m(state, 2);
    REQUIRE(component.amplitudes.size() == 1);
    CHECK(std::abs(component.normalized[0]) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(component.weight == doctest::Approx(std::norm(state.amplitude(2, 0, 0, 0))));
}

TEST_CASE("fixed-M projection reproduces the alternating expansion") {
    PdcState state = pdc_final_state_analytic({1, 0.3, 30});
    FixedMComponent component = project_fixed_m(state, 2);
    REQUIRE(component.amplitudes.size() == 2);
    // ratio -1/sqrt(2) of the l=1 to l=0 coefficients, any global phase
    std::complex<double> ratio = component.amplitudes[1] / component.amplitudes[0];
    CHECK(std::abs(ratio - std::complex<double>(-1.0 / std::sqrt(2.0))) < 1e-12);

    PdcState deeper = pdc_final_state_analytic({2, 0.4, 30});
    FixedMComponent wide = project_fixed_m(deeper, 6);
    for (Eigen::Index l = 0; l + 1 < wide.amplitudes.size(); ++l) {
        std::complex<double> step = wide.amplitudes[l + 1] / wide.amplitudes[l];
        CHECK(step.real() < 0.0); // consecutive terms alternate sign
        CHECK(std::abs(step.imag()) < 1e-12);
    }
}

TEST_CASE("projection rejects M below the input photon number") {
    PdcState state = pdc_final_state_analytic({2, 0.3, 10});
    CHECK_THROWS_AS(project_fixed_m(state, 1), std::invalid_argument);
    CHECK_THROWS_AS(project_fixed_m(state, 100), std::invalid_argument);
}

TEST_CASE("clone fidelity exact values") {
    CHECK(clone_fidelity_pdc(1, 2) == Rational(5, 6));
    CHECK(clone_fidelity_pdc(2, 3) == Rational(11, 12));
    for (int n = 1; n <= 8; ++n) CHECK(clone_fidelity_pdc(n, n) == Rational(1));
    CHECK_THROWS_AS(clone_fidelity_pdc(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(clone_fidelity_pdc(0, 3), std::invalid_argument);
}

TEST_CASE("clone fidelity is monotone in both arguments") {
    for (int n = 1; n <= 6; ++n)
        for (int m = n; m < n + 8; ++m)
            CHECK(clone_fidelity_pdc(n, m + 1) < clone_fidelity_pdc(n, m));
    for (int m = 8; m <= 12; ++m)
        for (int n = 1; n < 6; ++n)
            CHECK(clone_fidelity_pdc(n, m) < clone_fidelity_pdc(n + 1, m));
}

TEST_CASE("fidelity read off the projected state matches the exact rational") {
    for (int n : {1, 2, 3}) {
        for (int m = n; m <= n + 5; ++m) {
            PdcState state = pdc_final_state_analytic({n, 0.35, 30});
            FixedMComponent component = project_fixed_m(state, m);
            double right = 0.0;
            for (Eigen::Index l = 0; l < component.normalized.size(); ++l)
                right += std::norm(component.normalized[l]) *
                         (m - static_cast<int>(l));
            CHECK(std::abs(right / m - clone_fidelity_pdc(std::max(n, 1), m).to_double()) <
                  1e-12);
        }
    }
}

TEST_CASE("anti-clone fidelity exact values and M independence") {
    CHECK(anticlone_fidelity_pdc(1, 2) == Rational(2, 3));
    CHECK(anticlone_fidelity_pdc(2, 3) == Rational(3, 4));
    CHECK(anticlone_fidelity_pdc(1, 5) == anticlone_fidelity_pdc(1, 2));
    for (int n = 1; n <= 6; ++n)
        for (int m = n + 1; m <= n + 8; ++m)
            CHECK(anticlone_fidelity_pdc(n, m) == Rational(n + 1, n + 2));
    CHECK_THROWS_AS(anticlone_fidelity_pdc(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(anticlone_fidelity_pdc(3, 2), std::invalid_argument);
}

TEST_CASE("per-M weights sum toward unity under the auto cutoff") {
    PdcParameters params = PdcParameters::with_auto_cutoff(1, std::tanh(0.3));
    PdcState state = pdc_final_state_analytic(params);
    std::vector<double> weights = fixed_m_weights(state, 1 + params.cutoff);
    double total = 0.0;
    for (double w : weights) total += w;
    CHECK(total <= 1.0 + 1e-12);
    CHECK(std::abs(state.norm_deficit()) < 1e-12);
}

} // TEST_SUITE
