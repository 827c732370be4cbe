#ifndef CLONESIM_REPORT_HPP
#define CLONESIM_REPORT_HPP

#include "clonesim/atoms.hpp"
#include "clonesim/rational.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace clonesim {

/// 12 significant digits, the serialization used by every table writer.
std::string format_g12(double value);

/// CSV with header gamma_t,f_clones,f_opt,f_rand,n_all,n_right; undefined
/// metrics become empty fields; LF line endings.
void write_curve_csv(std::ostream& out, const FidelityCurve& curve);
nlohmann::json curve_to_json(const FidelityCurve& curve);

struct FidelityLine {
    std::string quantity;
    Rational exact;
};

void write_fidelities_csv(std::ostream& out, const std::vector<FidelityLine>& lines);
nlohmann::json fidelities_to_json(const std::vector<FidelityLine>& lines);

/// Per-M component weights, M = m_first, m_first+1, ...
void write_weights_csv(std::ostream& out, int m_first, const std::vector<double>& weights);
nlohmann::json weights_to_json(int m_first, const std::vector<double>& weights);

} // namespace clonesim

#endif
