#include "clonesim/atoms.hpp"
#include "clonesim/metrics.hpp"
#include "clonesim/pdc.hpp"
#include "clonesim/report.hpp"
#include "clonesim/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1; // failed check or numerical problem
constexpr int kExitUsage = 2;   // invalid arguments

// Writes to stdout when path is "-", otherwise to the file.
int with_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    if (path == "-") {
        fn(std::cout);
        return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file " << path << "\n";
        return kExitFailure;
    }
    fn(out);
    return kExitOk;
}

struct AtomsArgs {
    int n_atoms = 6;
    double gamma_t_max = 2.0;
    int steps = 100;
    std::string format = "csv";
    std::string out = "-";
};

int run_atoms(const AtomsArgs& args) {
    clonesim::AtomsSimConfig config{args.n_atoms, args.gamma_t_max, args.steps};
    clonesim::FidelityCurve curve;
    try {
        curve = clonesim::simulate_time_series(config);
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitFailure;
    }
    return with_output(args.out, [&](std::ostream& out) {
        if (args.format == "json")
            out << clonesim::curve_to_json(curve).dump(2) << "\n";
        else
            clonesim::write_curve_csv(out, curve);
    });
}

struct PdcArgs {
    int n_in = 1;
    int m_out = -1;
    double gamma_t = -1.0;
    bool weights = false;
    int m_max = -1;
    std::string format = "csv";
    std::string out = "-";
};

int run_pdc(const PdcArgs& args) {
    if (args.weights) {
        if (args.n_in < 0 || args.gamma_t < 0.0 || args.m_max < args.n_in) {
            std::cerr << "error: weights mode needs --n-in >= 0, --gamma-t >= 0 and "
                         "--m-max >= --n-in\n";
            return kExitUsage;
        }
        double gamma = std::tanh(args.gamma_t);
        auto params = clonesim::PdcParameters::with_auto_cutoff(args.n_in, gamma);
        params.cutoff = std::max(params.cutoff, args.m_max - args.n_in + 1);
        clonesim::PdcState state = clonesim::pdc_final_state_analytic(params);
        std::vector<double> weights = clonesim::fixed_m_weights(state, args.m_max);
        return with_output(args.out, [&](std::ostream& out) {
            if (args.format == "json")
                out << clonesim::weights_to_json(args.n_in, weights).dump(2) << "\n";
            else
                clonesim::write_weights_csv(out, args.n_in, weights);
        });
    }

    if (args.m_out < args.n_in || args.n_in < 1) {
        std::cerr << "error: fidelity mode needs --m-out >= --n-in >= 1\n";
        return kExitUsage;
    }
    std::vector<clonesim::FidelityLine> lines;
    try {
        lines.push_back({"clone_fidelity", clonesim::clone_fidelity_pdc(args.n_in, args.m_out)});
        if (args.m_out > args.n_in)
            lines.push_back({"anticlone_fidelity",
                             clonesim::anticlone_fidelity_pdc(args.n_in, args.m_out)});
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitFailure;
    }
    return with_output(args.out, [&](std::ostream& out) {
        if (args.format == "json")
            out << clonesim::fidelities_to_json(lines).dump(2) << "\n";
        else
            clonesim::write_fidelities_csv(out, lines);
    });
}

struct VerifyArgs {
    std::vector<std::string> only;
    int max_atoms = 4;
    std::uint32_t seed = 20240229;
};

int run_verify(const VerifyArgs& args) {
    clonesim::VerifyOptions options;
    options.max_atoms = args.max_atoms;
    options.seed = args.seed;
    options.only = args.only;
    std::vector<clonesim::CheckResult> results;
    try {
        results = clonesim::run_checks(options);
    } catch (const std::invalid_argument& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitUsage;
    }
    bool all_passed = true;
    for (const clonesim::CheckResult& result : results) {
        all_passed = all_passed && result.passed;
        std::cout << (result.passed ? "PASS " : "FAIL ") << result.name
                  << " (deviation " << clonesim::format_g12(result.deviation)
                  << ", allowed " << clonesim::format_g12(result.threshold) << ")";
        if (!result.detail.empty()) std::cout << " - " << result.detail;
        std::cout << "\n";
    }
    return all_passed ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stimulated-emission quantum cloning simulator"};
    app.require_subcommand(1);

    AtomsArgs atoms_args;
    CLI::App* atoms = app.add_subcommand(
        "atoms", "Time series of cloning fidelities for an ensemble of three-level emitters");
    atoms->add_option("--n-atoms", atoms_args.n_atoms, "Number of emitters (1..8)")
        ->check(CLI::Range(1, 8));
    atoms->add_option("--gamma-t-max", atoms_args.gamma_t_max,
                      "Final dimensionless time gamma*t")
        ->check(CLI::PositiveNumber);
    atoms->add_option("--steps", atoms_args.steps, "Number of grid steps (rows = steps+1)")
        ->check(CLI::Range(1, 100000));
    atoms->add_option("--format", atoms_args.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    atoms->add_option("--out", atoms_args.out, "Output path, or - for stdout");

    PdcArgs pdc_args;
    CLI::App* pdc = app.add_subcommand(
        "pdc", "Down-conversion cloner: exact fidelities or component weights");
    pdc->add_option("--n-in", pdc_args.n_in, "Number of input photons");
    pdc->add_option("--m-out", pdc_args.m_out, "Total photons in mode 1 (fidelity mode)");
    pdc->add_option("--gamma-t", pdc_args.gamma_t, "Dimensionless time (weights mode)");
    pdc->add_flag("--weights", pdc_args.weights, "Print per-M component weights");
    pdc->add_option("--m-max", pdc_args.m_max, "Largest M reported in weights mode");
    pdc->add_option("--format", pdc_args.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    pdc->add_option("--out", pdc_args.out, "Output path, or - for stdout");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Run the property-check suite");
    verify->add_option("--only", verify_args.only, "Run only the named checks");
    verify->add_option("--max-atoms", verify_args.max_atoms,
                       "Scope of the atom-model checks")
        ->check(CLI::Range(1, 8));
    verify->add_option("--seed", verify_args.seed, "Seed for randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& error) {
        app.exit(error);
        return kExitUsage;
    }

    try {
        if (atoms->parsed()) return run_atoms(atoms_args);
        if (pdc->parsed()) return run_pdc(pdc_args);
        if (verify->parsed()) return run_verify(verify_args);
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
