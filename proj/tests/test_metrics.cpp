#include "clonesim/metrics.hpp"

#include <doctest.h>

#include <random>

using namespace clonesim;

namespace {

PhotonCountDistribution dist(PhotonCountDistribution::Map m) {
    return PhotonCountDistribution::from_map(std::move(m));
}

} // namespace

TEST_SUITE("metrics") {

TEST_CASE("f_clones on a mixed two-photon distribution") {
    // denominator 3/4; p'(2,0) = 2/3 contributes 1, p'(1,1) = 1/3 contributes 1/2
    auto p = dist({{{2, 0}, 0.5}, {{1, 1}, 0.25}, {{1, 0}, 0.25}});
    CHECK(f_clones(p) == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("f_clones undefined without multi-photon events") {
    auto p = dist({{{1, 0}, 1.0}});
    CHECK_THROWS_AS(f_clones(p), UndefinedMetricError);
    CHECK_THROWS_AS(f_opt(p), UndefinedMetricError);
    CHECK_THROWS_AS(f_rand(p), UndefinedMetricError);
    MetricReport report = metric_report(p);
    CHECK_FALSE(report.f_clones.has_value());
    CHECK(report.n_all == doctest::Approx(1.0));
    CHECK(report.n_right == doctest::Approx(1.0));
}

TEST_CASE("all photons wrong gives zero clone fidelity") {
    auto p = dist({{{0, 2}, 1.0}});
    CHECK(f_clones(p) == doctest::Approx(0.0));
}

TEST_CASE("f_opt fixed photon-number values") {
    CHECK(f_opt(dist({{{2, 0}, 1.0}})) == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
    CHECK(f_opt(dist({{{1, 2}, 1.0}})) == doctest::Approx(7.0 / 9.0).epsilon(1e-12));
    // large-n limit 2/3
    CHECK(f_opt(dist({{{1000000, 0}, 1.0}})) == doctest::Approx(2.0 / 3.0).epsilon(1e-5));
}

TEST_CASE("f_rand fixed photon-number values") {
    CHECK(f_rand(dist({{{2, 0}, 1.0}})) == doctest::Approx(3.0 / 4.0).epsilon(1e-12));
    CHECK(f_rand(dist({{{1, 1}, 0.5}, {{4, 0}, 0.5}})) ==
          doctest::Approx(11.0 / 16.0).epsilon(1e-12));
    CHECK(f_rand(dist({{{500000, 500000}, 1.0}})) ==
          doctest::Approx(0.5).epsilon(1e-5));
}

TEST_CASE("optimal_fidelity exact values") {
    CHECK(optimal_fidelity(1, 2) == Rational(5, 6));
    CHECK(optimal_fidelity(2, 3) == Rational(11, 12));
    CHECK(optimal_fidelity(3, 3) == Rational(1));
    for (int m = 2; m <= 50; ++m)
        CHECK(optimal_fidelity(1, m) == Rational(2, 3) + Rational(1, 3 * std::int64_t{m}));
    CHECK_THROWS_AS(optimal_fidelity(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(optimal_fidelity(0, 1), std::invalid_argument);
}

TEST_CASE("optimal_fidelity stays in (2/3, 1], equal to 1 iff N = M") {
    for (int n = 1; n <= 8; ++n) {
        for (int m = n; m <= n + 8; ++m) {
            Rational f = optimal_fidelity(n, m);
            CHECK(f > Rational(2, 3));
            CHECK(f <= Rational(1));
            CHECK((f == Rational(1)) == (n == m));
        }
    }
}

TEST_CASE("mean photon numbers") {
    auto [all1, right1] = mean_photon_numbers(dist({{{2, 0}, 1.0}}));
    CHECK(all1 == doctest::Approx(2.0));
    CHECK(right1 == doctest::Approx(2.0));
    auto [all2, right2] = mean_photon_numbers(dist({{{1, 1}, 1.0}}));
    CHECK(all2 == doctest::Approx(2.0));
    CHECK(right2 == doctest::Approx(1.0));
    auto [all3, right3] = mean_photon_numbers(dist({{{1, 0}, 0.5}, {{3, 1}, 0.5}}));
    CHECK(all3 == doctest::Approx(2.5));
    CHECK(right3 == doctest::Approx(2.0));
}

TEST_CASE("f_rand <= f_opt for random multi-photon distributions") {
    std::mt19937 rng(31);
    auto u = [&rng]() { return rng() * (1.0 / 4294967296.0); };
    for (int trial = 0; trial < 100; ++trial) {
        PhotonCountDistribution::Map m;
        double total = 0.0;
        int support = 2 + static_cast<int>(rng() % 6);
        for (int i = 0; i < support; ++i) {
            int n = 2 + static_cast<int>(rng() % 9);
            int k = static_cast<int>(rng() % (n + 1));
            m[{k, n - k}] += u() + 1e-3;
        }
        for (auto& [kl, p] : m) total += p;
        for (auto& [kl, p] : m) p /= total;
        auto p = dist(std::move(m));
        double rand_val = f_rand(p);
        double opt_val = f_opt(p);
        CHECK(rand_val >= 0.5 - 1e-12);
        CHECK(rand_val <= opt_val + 1e-12);
        CHECK(opt_val <= 1.0 + 1e-12);
    }
}

TEST_CASE("renormalization is a no-op when all mass is multi-photon") {
    auto p = dist({{{2, 0}, 0.25}, {{1, 1}, 0.25}, {{0, 2}, 0.5}});
    MetricReport report = metric_report(p);
    CHECK(report.renorm_denominator == doctest::Approx(1.0).epsilon(1e-12));
    double direct = 0.25 * 1.0 + 0.25 * 0.5 + 0.5 * 0.0;
    CHECK(*report.f_clones == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("distribution construction guards") {
    CHECK_THROWS(PhotonCountDistribution::from_map({{{1, 0}, 0.5}})); // total != 1
    CHECK_THROWS(PhotonCountDistribution::from_map({{{1, 0}, 1.5}, {{0, 1}, -0.5}}));
    auto p = PhotonCountDistribution::from_map({{{1, 0}, 1.0}, {{2, 0}, -5e-13}});
    CHECK(p.probability(2, 0) == 0.0); // clipped
    CHECK(p.probability(9, 9) == 0.0); // absent
}

} // TEST_SUITE
