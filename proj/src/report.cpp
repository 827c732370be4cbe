#include "clonesim/report.hpp"

#include <cstdio>

namespace clonesim {

std::string format_g12(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

namespace {

std::string field(const std::optional<double>& value) {
    return value ? format_g12(*value) : std::string{};
}

} // namespace

void write_curve_csv(std::ostream& out, const FidelityCurve& curve) {
    out << "gamma_t,f_clones,f_opt,f_rand,n_all,n_right\n";
    for (const FidelityPoint& row : curve.rows) {
        out << format_g12(row.gamma_t) << ',' << field(row.f_clones) << ','
            << field(row.f_opt) << ',' << field(row.f_rand) << ','
            << format_g12(row.n_all) << ',' << format_g12(row.n_right) << '\n';
    }
}

nlohmann::json curve_to_json(const FidelityCurve& curve) {
    nlohmann::json rows = nlohmann::json::array();
    for (const FidelityPoint& row : curve.rows) {
        nlohmann::json obj;
        obj["gamma_t"] = row.gamma_t;
        obj["f_clones"] = row.f_clones ? nlohmann::json(*row.f_clones) : nlohmann::json();
        obj["f_opt"] = row.f_opt ? nlohmann::json(*row.f_opt) : nlohmann::json();
        obj["f_rand"] = row.f_rand ? nlohmann::json(*row.f_rand) : nlohmann::json();
        obj["n_all"] = row.n_all;
        obj["n_right"] = row.n_right;
        rows.push_back(std::move(obj));
    }
    return rows;
}

void write_fidelities_csv(std::ostream& out, const std::vector<FidelityLine>& lines) {
    out << "quantity,exact,decimal\n";
    for (const FidelityLine& line : lines)
        out << line.quantity << ',' << line.exact.to_string() << ','
            << format_g12(line.exact.to_double()) << '\n';
}

nlohmann::json fidelities_to_json(const std::vector<FidelityLine>& lines) {
    nlohmann::json rows = nlohmann::json::array();
    for (const FidelityLine& line : lines) {
        rows.push_back({{"quantity", line.quantity},
                        {"exact", line.exact.to_string()},
                        {"decimal", line.exact.to_double()}});
    }
    return rows;
}

void write_weights_csv(std::ostream& out, int m_first, const std::vector<double>& weights) {
    out << "m,weight\n";
    for (std::size_t i = 0; i < weights.size(); ++i)
        out << (m_first + static_cast<int>(i)) << ',' << format_g12(weights[i]) << '\n';
}

nlohmann::json weights_to_json(int m_first, const std::vector<double>& weights) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < weights.size(); ++i)
        rows.push_back({{"m", m_first + static_cast<int>(i)}, {"weight", weights[i]}});
    return rows;
}

} // namespace clonesim
