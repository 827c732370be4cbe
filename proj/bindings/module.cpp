#include "clonesim/atoms.hpp"
#include "clonesim/hilbert.hpp"
#include "clonesim/metrics.hpp"
#include "clonesim/pdc.hpp"
#include "clonesim/symmetry.hpp"
#include "clonesim/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

namespace py = pybind11;
using namespace clonesim;

namespace {

py::object to_fraction(const Rational& value) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::object num = py::module_::import("builtins").attr("int")(value.num().to_string());
    py::object den = py::module_::import("builtins").attr("int")(value.den().to_string());
    return fraction(num, den);
}

std::string level_name(AtomLevel level) {
    switch (level) {
        case AtomLevel::G: return "G";
        case AtomLevel::E1: return "E1";
        default: return "E2";
    }
}

PhotonCountDistribution dist_from_dict(const PhotonCountDistribution::Map& probs) {
    return PhotonCountDistribution::from_map(probs);
}

HermitianOperator hermitian_from_matrix(const Eigen::MatrixXcd& matrix) {
    if (matrix.rows() != matrix.cols())
        throw std::invalid_argument("matrix must be square");
    if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("matrix is not Hermitian within 1e-12");
    HermitianOperator h(matrix.rows());
    for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
        h.add_pair(i, i, matrix(i, i).real());
        for (Eigen::Index j = i + 1; j < matrix.cols(); ++j)
            h.add_pair(i, j, 0.5 * (matrix(i, j) + std::conj(matrix(j, i))));
    }
    return h;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantum-cloning simulators: three-level emitter ensembles and "
              "parametric down-conversion, with exact fidelity bounds";

    py::register_exception<UndefinedMetricError>(m, "UndefinedMetricError");
    py::register_exception<CutoffTooSmallError>(m, "CutoffTooSmallError");

    py::class_<Sector>(m, "Sector")
        .def_readonly("n_atoms", &Sector::n_atoms)
        .def_readonly("charge1", &Sector::charge1)
        .def_readonly("charge2", &Sector::charge2)
        .def_property_readonly("size", &Sector::size)
        .def("states",
             [](const Sector& sector) {
                 py::list states;
                 for (const FockBasisState& state : sector.basis) {
                     py::list levels;
                     for (AtomLevel level : state.atoms)
                         levels.append(level_name(level));
                     states.append(py::make_tuple(levels, state.photons1, state.photons2));
                 }
                 return states;
             },
             "Basis as (levels, photons1, photons2) tuples, in basis order")
        .def("__len__", &Sector::size)
        .def("__repr__", [](const Sector& sector) {
            return "Sector(n_atoms=" + std::to_string(sector.n_atoms) +
                   ", N1=" + std::to_string(sector.charge1) +
                   ", N2=" + std::to_string(sector.charge2) +
                   ", size=" + std::to_string(sector.size()) + ")";
        });

    m.def("enumerate_sector", &enumerate_sector, py::arg("n_atoms"), py::arg("n1"),
          py::arg("n2"),
          "Basis of the invariant subspace with conserved charges (n1, n2)");

    m.def(
        "build_hamiltonian",
        [](const Sector& sector) { return build_hamiltonian(sector).matrix(); },
        py::arg("sector"),
        "Sector Hamiltonian divided by the coupling, as a dense matrix");

    m.def(
        "evolve_unitary",
        [](const Eigen::MatrixXcd& h, double t, const Eigen::VectorXcd& psi) {
            return evolve_unitary(hermitian_from_matrix(h), t, psi);
        },
        py::arg("hamiltonian"), py::arg("t"), py::arg("psi"),
        "exp(-i H t) psi for a Hermitian matrix (checked within 1e-12)");

    py::class_<FidelityPoint>(m, "FidelityPoint")
        .def_readonly("gamma_t", &FidelityPoint::gamma_t)
        .def_readonly("f_clones", &FidelityPoint::f_clones)
        .def_readonly("f_opt", &FidelityPoint::f_opt)
        .def_readonly("f_rand", &FidelityPoint::f_rand)
        .def_readonly("n_all", &FidelityPoint::n_all)
        .def_readonly("n_right", &FidelityPoint::n_right);

    m.def(
        "photon_distribution",
        [](int n_atoms, double gamma_t) {
            return photon_distribution(initial_ensemble(n_atoms), gamma_t).entries();
        },
        py::arg("n_atoms"), py::arg("gamma_t"),
        "p(k, l) for the standard ensemble evolved to gamma_t, as a dict");

    m.def(
        "simulate_time_series",
        [](int n_atoms, double gamma_t_max, int steps) {
            return simulate_time_series(AtomsSimConfig{n_atoms, gamma_t_max, steps}).rows;
        },
        py::arg("n_atoms"), py::arg("gamma_t_max"), py::arg("steps"),
        "Fidelity and photon-number curves on a uniform grid of steps+1 points");

    m.def(
        "f_clones",
        [](const PhotonCountDistribution::Map& p) { return f_clones(dist_from_dict(p)); },
        py::arg("p"), "Average right-photon frequency over multi-photon outcomes");
    m.def(
        "f_opt",
        [](const PhotonCountDistribution::Map& p) { return f_opt(dist_from_dict(p)); },
        py::arg("p"));
    m.def(
        "f_rand",
        [](const PhotonCountDistribution::Map& p) { return f_rand(dist_from_dict(p)); },
        py::arg("p"));
    m.def(
        "mean_photon_numbers",
        [](const PhotonCountDistribution::Map& p) {
            return mean_photon_numbers(dist_from_dict(p));
        },
        py::arg("p"), "(n_all, n_right) expectations over the full distribution");

    m.def(
        "optimal_fidelity",
        [](int n_in, int m_out) { return to_fraction(optimal_fidelity(n_in, m_out)); },
        py::arg("n_in"), py::arg("m_out"),
        "Exact optimal N -> M cloning fidelity as a Fraction");
    m.def(
        "clone_fidelity",
        [](int n_in, int m_out) { return to_fraction(clone_fidelity_pdc(n_in, m_out)); },
        py::arg("n_in"), py::arg("m_out"),
        "Exact clone fidelity of the fixed-M down-conversion component");
    m.def(
        "anticlone_fidelity",
        [](int n_in, int m_out) { return to_fraction(anticlone_fidelity_pdc(n_in, m_out)); },
        py::arg("n_in"), py::arg("m_out"),
        "Exact fidelity of the flipped outputs in mode 2 (requires M > N)");

    py::class_<FixedMComponent>(m, "FixedMComponent")
        .def_readonly("n_input", &FixedMComponent::n_input)
        .def_readonly("m_total", &FixedMComponent::m_total)
        .def_readonly("amplitudes", &FixedMComponent::amplitudes)
        .def_readonly("normalized", &FixedMComponent::normalized)
        .def_readonly("weight", &FixedMComponent::weight);

    py::class_<PdcState>(m, "PdcState")
        .def_property_readonly("n_input", &PdcState::n_input)
        .def_property_readonly("tanh_gamma_t", &PdcState::tanh_gamma_t)
        .def_property_readonly("cutoff", &PdcState::cutoff)
        .def_property_readonly("grid", &PdcState::grid,
                               "Amplitude of |k+N, l, l, k> at grid[k, l]")
        .def_property_readonly("normalization", &PdcState::normalization)
        .def_property_readonly("norm_deficit", &PdcState::norm_deficit)
        .def("amplitude", &PdcState::amplitude, py::arg("nv1"), py::arg("nh1"),
             py::arg("nv2"), py::arg("nh2"))
        .def("project_fixed_m", &project_fixed_m, py::arg("m_total"))
        .def("fixed_m_weights", &fixed_m_weights, py::arg("m_max"));

    m.def(
        "pdc_final_state_analytic",
        [](int n_input, double tanh_gamma_t, std::optional<int> cutoff) {
            PdcParameters params =
                cutoff ? PdcParameters{n_input, tanh_gamma_t, *cutoff}
                       : PdcParameters::with_auto_cutoff(n_input, tanh_gamma_t);
            return pdc_final_state_analytic(params);
        },
        py::arg("n_input"), py::arg("tanh_gamma_t"), py::arg("cutoff") = std::nullopt,
        "Closed-form down-conversion state; cutoff defaults to the auto rule");

    m.def("pdc_evolve_numeric", &pdc_evolve_numeric, py::arg("n_input"),
          py::arg("gamma_t"), py::arg("cutoff"),
          "Down-conversion state from direct exponentiation on a truncated grid");

    m.def(
        "pdc_overlap",
        [](const PdcState& a, const PdcState& b) { return overlap(a, b); },
        py::arg("a"), py::arg("b"));

    py::class_<Su2Rotation>(m, "Su2Rotation")
        .def(py::init<std::complex<double>, std::complex<double>>(), py::arg("a"),
             py::arg("b"))
        .def_static("identity", &Su2Rotation::identity)
        .def_property_readonly("a", &Su2Rotation::a)
        .def_property_readonly("b", &Su2Rotation::b)
        .def("inverse", &Su2Rotation::inverse);

    m.def("seeded_rotations", &seeded_rotations, py::arg("seed"), py::arg("count"));
    m.def("fock_rotation_matrix", &fock_rotation_matrix, py::arg("rotation"),
          py::arg("total_photons"));

    py::class_<UniversalityReport>(m, "UniversalityReport")
        .def_readonly("f_clones_deviation", &UniversalityReport::f_clones_deviation)
        .def_readonly("f_opt_deviation", &UniversalityReport::f_opt_deviation)
        .def_readonly("f_rand_deviation", &UniversalityReport::f_rand_deviation)
        .def_readonly("n_all_deviation", &UniversalityReport::n_all_deviation)
        .def("max_deviation", &UniversalityReport::max_deviation);

    m.def(
        "universality_check",
        [](const Su2Rotation& rot, int n_atoms, double gamma_t_max, int steps) {
            return universality_check(rot, AtomsSimConfig{n_atoms, gamma_t_max, steps});
        },
        py::arg("rotation"), py::arg("n_atoms"), py::arg("gamma_t_max") = 2.0,
        py::arg("steps") = 20,
        "Largest metric-curve deviation between rotated and canonical input");

    m.def("pdc_rotated_clone_fidelity", &pdc_rotated_clone_fidelity, py::arg("n_in"),
          py::arg("m_out"), py::arg("tanh_gamma_t"), py::arg("rotation"));

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("passed", &CheckResult::passed)
        .def_readonly("deviation", &CheckResult::deviation)
        .def_readonly("threshold", &CheckResult::threshold)
        .def_readonly("detail", &CheckResult::detail)
        .def("__repr__", [](const CheckResult& result) {
            return std::string(result.passed ? "PASS " : "FAIL ") + result.name;
        });

    m.def(
        "run_checks",
        [](int max_atoms, std::uint32_t seed, const std::vector<std::string>& only) {
            VerifyOptions options;
            options.max_atoms = max_atoms;
            options.seed = seed;
            options.only = only;
            return run_checks(options);
        },
        py::arg("max_atoms") = 4, py::arg("seed") = 20240229,
        py::arg("only") = std::vector<std::string>{},
        "Run the property-check suite and return per-check results");

    m.def("check_names", &check_names);

    m.attr("__version__") = "0.1.0";
}
