#include "clonesim/metrics.hpp"

#include <stdexcept>

namespace clonesim {

namespace {

constexpr double kDenominatorGuard = 1e-12;

double renorm_denominator(const PhotonCountDistribution& p) {
    return 1.0 - p.probability(1, 0) - p.probability(0, 1);
}

double require_denominator(const PhotonCountDistribution& p) {
    double d = renorm_denominator(p);
    if (d <= kDenominatorGuard)
        throw UndefinedMetricError("no multi-photon events: denominator <= 1e-12");
    return d;
}

double multi_photon_average(const PhotonCountDistribution& p, double d,
                            double (*weight)(int k, int l)) {
    double sum = 0.0;
    for (const auto& [kl, prob] : p.entries()) {
        auto [k, l] = kl;
        if (k + l < 2) continue;
        sum += (prob / d) * weight(k, l);
    }
    return sum;
}

} // namespace

double f_clones(const PhotonCountDistribution& p) {
    double d = require_denominator(p);
    return multi_photon_average(p, d, [](int k, int l) {
        return static_cast<double>(k) / (k + l);
    });
}

double f_opt(const PhotonCountDistribution& p) {
    double d = require_denominator(p);
    return multi_photon_average(p, d, [](int k, int l) {
        int n = k + l;
        return (2.0 * n + 1.0) / (3.0 * n);
    });
}

double f_rand(const PhotonCountDistribution& p) {
    double d = require_denominator(p);
    return multi_photon_average(p, d, [](int k, int l) {
        int n = k + l;
        return (n + 1.0) / (2.0 * n);
    });
}

Rational optimal_fidelity(int n_in, int m_out) {
    if (n_in < 1 || m_out < n_in)
        throw std::invalid_argument("optimal_fidelity: requires M >= N >= 1");
    std::int64_t n = n_in, m = m_out;
    return Rational(n * m + n + m, m * (n + 2));
}

std::pair<double, double> mean_photon_numbers(const PhotonCountDistribution& p) {
    double n_all = 0.0, n_right = 0.0;
    for (const auto& [kl, prob] : p.entries()) {
        auto [k, l] = kl;
        n_all += prob * (k + l);
        n_right += prob * k;
    }
    return {n_all, n_right};
}

MetricReport metric_report(const PhotonCountDistribution& p) {
    MetricReport report;
    report.renorm_denominator = renorm_denominator(p);
    auto [n_all, n_right] = mean_photon_numbers(p);
    report.n_all = n_all;
    report.n_right = n_right;
    if (report.renorm_denominator > kDenominatorGuard) {
        report.f_clones = f_clones(p);
        report.f_opt = f_opt(p);
        report.f_rand = f_rand(p);
    }
    return report;
}

} // namespace clonesim
