#ifndef CLONESIM_VERIFY_HPP
#define CLONESIM_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace clonesim {

struct CheckResult {
    std::string name;
    bool passed = false;
    double deviation = 0.0; // measured worst case
    double threshold = 0.0; // largest deviation still accepted
    std::string detail;
};

struct VerifyOptions {
    int max_atoms = 4;           // scope of the atom-model checks (clamped per check)
    std::uint32_t seed = 20240229;
    std::vector<std::string> only; // empty = run everything
};

std::vector<std::string> check_names();

/// Runs the property suite: sector enumeration against brute force,
/// evolution unitarity, distribution normalization, the vacuum-zero rule,
/// fidelity bound ordering, ensemble reduction, analytic/numeric
/// down-conversion agreement, the exact fidelity identities, and the
/// rotation-invariance checks.
std::vector<CheckResult> run_checks(const VerifyOptions& options);

} // namespace clonesim

#endif
