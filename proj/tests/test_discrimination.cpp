// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <limits>
#include <random>

#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qillum/discrimination.hpp"

using namespace qillum;

namespace {

ScenarioParams make_params(double eta, double b, int d) {
  ScenarioParams p;
  p.reflectivity = eta;
  p.thermal_weight = b;
  p.mode_count = d;
  return p;
}

HypothesisPair unent(double eta, double b, int d) {
  return unentangled_pair(make_params(eta, b, d), SignalSpec::uniform(d));
}

double coincidence_band(double eta, double b) { return 5.0 * (b * b + eta * b); }

}  // namespace

TEST_CASE("helstrom on identical hypotheses returns the smaller prior") {
  const auto pair = unent(0.0, 0.02, 3);
  const auto equal = helstrom(pair, 0.5, 0.5);
  CHECK(equal.p_error == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(equal.measurement.entries().cwiseAbs().maxCoeff() <= 1e-12);
  const auto skewed = helstrom(pair, 0.3, 0.7);
  CHECK(skewed.p_error == doctest::Approx(0.3).epsilon(1e-10));
}

TEST_CASE("helstrom error matches the trace-distance closed forms") {
  const auto u = helstrom(unent(0.1, 0.01, 4), 0.5, 0.5);
  CHECK(u.p_error == doctest::Approx(0.4505).epsilon(1e-10));
  const auto e = helstrom(entangled_pair(make_params(0.1, 0.01, 4)), 0.5, 0.5);
  CHECK(e.p_error == doctest::Approx(0.450125).epsilon(1e-10));
}

TEST_CASE("helstrom satisfies its own measurement identity") {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = testutil::draw_params(gen, 0.1, 8);
    const auto pair = unentangled_pair(p, SignalSpec::uniform(p.mode_count));
    std::uniform_real_distribution<double> prior_dist(0.1, 0.9);
    const double prior0 = prior_dist(gen);
    const auto result = helstrom(pair, prior0, 1.0 - prior0);
    const Eigen::MatrixXcd proj = result.measurement.entries();
    const Eigen::MatrixXcd rest =
        Eigen::MatrixXcd::Identity(pair.absent.dim(), pair.absent.dim()) - proj;
    const double recomputed =
        prior0 * (proj * pair.absent.entries()).trace().real() +
        (1.0 - prior0) * (rest * pair.present.entries()).trace().real();
    CHECK(std::abs(result.p_error - recomputed) <= 1e-10);
  }
}

TEST_CASE("equal-prior helstrom reduces to the trace distance formula") {
  std::mt19937_64 gen(32);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = testutil::draw_params(gen, 0.1, 8);
    const auto pair = entangled_pair(p);
    const double expected =
        0.5 - 0.25 * trace_distance(pair.present, pair.absent);
    CHECK(std::abs(helstrom(pair, 0.5, 0.5).p_error - expected) <= 1e-10);
  }
}

TEST_CASE("helstrom rejects priors that do not sum to 1") {
  const auto pair = unent(0.1, 0.01, 2);
  CHECK_THROWS_AS(helstrom(pair, 0.3, 0.6), DomainError);
}

TEST_CASE("overlap endpoints are normalized for full-support states") {
  const auto pair = unent(0.1, 0.01, 4);
  CHECK(chernoff_overlap(pair.absent, pair.present, 0.0) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(chernoff_overlap(pair.absent, pair.present, 1.0) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(chernoff_overlap(pair.absent, pair.absent, 0.37) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(chernoff_overlap(pair.absent, pair.present, -0.01), DomainError);
  CHECK_THROWS_AS(chernoff_overlap(pair.absent, pair.present, 1.01), DomainError);
}

TEST_CASE("overlap agrees with the closed form and the power-product route") {
  std::mt19937_64 gen(33);
  for (int trial = 0; trial < 8; ++trial) {
    const auto p = testutil::draw_params(gen, 0.1, 6);
    const auto pair = unentangled_pair(p, SignalSpec::uniform(p.mode_count));
    std::uniform_real_distribution<double> s_dist(0.0, 1.0);
    const double s = s_dist(gen);
    const double value = chernoff_overlap(pair.absent, pair.present, s);
    CHECK(std::abs(value - oracle::overlap_unentangled(p.reflectivity,
                                                       p.thermal_weight, s)) <=
          1e-11);
    const double via_powers = real_trace_product(dm_power(pair.absent, 1.0 - s),
                                                 dm_power(pair.present, s));
    CHECK(std::abs(value - via_powers) <= 1e-11);
  }
}

TEST_CASE("numeric bound at eta=0 is trivial") {
  const auto result = chernoff_numeric(unent(0.0, 0.01, 3));
  CHECK(result.q == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(result.exponent) <= 1e-12);
}

TEST_CASE("numeric bound matches an independent minimization of the closed form") {
  const auto result = chernoff_numeric(unent(0.01, 0.1, 4));
  const auto reference = oracle::minimize_scan(
      [](double s) { return oracle::overlap_unentangled(0.01, 0.1, s); }, 0.0, 1.0);
  CHECK(std::abs(result.q - reference.value) <= 1e-9);
  CHECK(std::abs(result.s_star - reference.x) <= 1e-4);
  CHECK(result.exponent == doctest::Approx(-std::log(result.q)).epsilon(1e-12));
  CHECK(std::abs(result.q - chernoff_analytic_unentangled(0.01, 0.1).q) <=
        coincidence_band(0.01, 0.1));
}

TEST_CASE("numeric bound never exceeds grid samples of the overlap") {
  const auto pair = unent(0.02, 0.05, 3);
  const auto result = chernoff_numeric(pair);
  for (int i = 0; i <= 32; ++i) {
    const double s = static_cast<double>(i) / 32.0;
    CHECK(result.q <= chernoff_overlap(pair.absent, pair.present, s) + 1e-12);
  }
}

TEST_CASE("analytic bound reproduces the frozen bad-regime point") {
  const auto r = chernoff_analytic_unentangled(0.01, 0.1);
  CHECK(r.s_star == doctest::Approx(0.5039709569099905).epsilon(1e-12));
  CHECK(r.q == doctest::Approx(0.9998808773034707).epsilon(1e-12));
  const double approx = 1.0 - 0.01 * 0.01 / (8.0 * 0.1);
  CHECK(std::abs(r.q - approx) <= 0.05 * (1.0 - r.q));
}

TEST_CASE("analytic bound reproduces the frozen good-regime point") {
  const auto r = chernoff_analytic_unentangled(0.01, 0.001);
  CHECK(r.s_star == doctest::Approx(0.5955196318494227).epsilon(1e-12));
  CHECK(r.q == doctest::Approx(0.9972151275957482).epsilon(1e-12));
  CHECK(r.q > 1.0 - 0.01);
}

TEST_CASE("analytic bound edge cases") {
  const auto no_noise = chernoff_analytic_unentangled(0.3, 0.0);
  CHECK(no_noise.q == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(no_noise.s_star == 1.0);
  const auto no_signal = chernoff_analytic_unentangled(0.0, 0.05);
  CHECK(no_signal.q == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(chernoff_analytic_unentangled(-0.1, 0.05), DomainError);
  CHECK_THROWS_AS(chernoff_analytic_unentangled(0.1, -0.05), DomainError);
}

TEST_CASE("analytic bound matches a scan of its own objective") {
  std::mt19937_64 gen(34);
  std::uniform_real_distribution<double> eta_dist(1e-3, 0.3);
  std::uniform_real_distribution<double> b_dist(1e-4, 0.2);
  for (int trial = 0; trial < 20; ++trial) {
    const double eta = eta_dist(gen);
    const double b = b_dist(gen);
    const auto r = chernoff_analytic_unentangled(eta, b);
    const auto reference = oracle::minimize_scan(
        [&](double s) { return oracle::overlap_reduced(eta, b, s); }, 0.0, 1.0);
    CHECK(std::abs(r.q - reference.value) <= 1e-10);
  }
}

TEST_CASE("entangled analytic bound is the unentangled one at b/d, bitwise") {
  std::mt19937_64 gen(35);
  std::uniform_real_distribution<double> eta_dist(1e-3, 0.3);
  std::uniform_real_distribution<double> b_dist(1e-4, 0.2);
  for (int trial = 0; trial < 20; ++trial) {
    const double eta = eta_dist(gen);
    const double b = b_dist(gen);
    const int d = 1 + static_cast<int>(gen() % 100);
    const auto ent = chernoff_analytic_entangled(eta, b, d);
    const auto unent_result = chernoff_analytic_unentangled(eta, b / d);
    CHECK(ent.q == unent_result.q);
    CHECK(ent.s_star == unent_result.s_star);
    CHECK(ent.exponent == unent_result.exponent);
  }
  CHECK(chernoff_analytic_entangled(0.01, 0.1, 100).q ==
        chernoff_analytic_unentangled(0.01, 0.001).q);
}

TEST_CASE("entangled numeric bound matches the unentangled one at b/d") {
  std::mt19937_64 gen(36);
  for (int trial = 0; trial < 6; ++trial) {
    const auto p = testutil::draw_params(gen, 0.1, 8);
    const auto ent = chernoff_numeric(entangled_pair(p));
    const auto reduced = chernoff_numeric(
        unentangled_pair(make_params(p.reflectivity,
                                     p.thermal_weight / p.mode_count,
                                     p.mode_count),
                         SignalSpec::uniform(p.mode_count)));
    CHECK(std::abs(ent.q - reduced.q) <= 1e-9);
    CHECK(std::abs(ent.q - reduced.q) <=
          coincidence_band(p.reflectivity, p.thermal_weight));
  }
}

TEST_CASE("entangled bad-regime deficit matches eta^2 d / (8 b)") {
  const auto r = chernoff_analytic_entangled(0.001, 0.1, 16);
  const double deficit = 1.0 - r.q;
  CHECK(deficit == doctest::Approx(1.8546827254106724e-05).epsilon(1e-9));
  const double approx = 0.001 * 0.001 * 16 / (8.0 * 0.1);
  CHECK(std::abs(deficit - approx) <= 0.1 * approx);
}

TEST_CASE("bad-regime asymptotics hold across the sanctioned ratios") {
  for (double ratio : {0.01, 0.05, 0.1}) {
    const double b = 0.1;
    const double eta = ratio * b;
    const auto r = chernoff_analytic_unentangled(eta, b);
    const double approx = eta * eta / (8.0 * b);
    CHECK(std::abs((1.0 - r.q) - approx) <= 0.1 * approx);
  }
}

TEST_CASE("deep bad regime pins the minimizer near one half") {
  std::mt19937_64 gen(37);
  std::uniform_real_distribution<double> b_dist(0.02, 0.2);
  for (int trial = 0; trial < 10; ++trial) {
    const double b = b_dist(gen);
    const double eta = 0.01 * b;
    CHECK(std::abs(chernoff_analytic_unentangled(eta, b).s_star - 0.5) <= 0.01);
  }
  const auto numeric = chernoff_numeric(unent(0.001, 0.1, 2));
  CHECK(std::abs(numeric.s_star - 0.5) <= 0.01);
}

TEST_CASE("numeric bound is monotone along parameter grids") {
  double previous = 1.0;
  for (double eta : {0.005, 0.01, 0.02, 0.04}) {
    const double q = chernoff_numeric(unent(eta, 0.05, 4)).q;
    CHECK(q < previous);
    previous = q;
  }
  previous = 0.0;
  for (double b : {0.01, 0.02, 0.04, 0.08}) {
    const double q = chernoff_numeric(unent(0.01, b, 4)).q;
    CHECK(q > previous);
    previous = q;
  }
  previous = 1.0 + 1e-15;
  for (int d : {1, 2, 4, 8}) {
    const double q = chernoff_numeric(entangled_pair(make_params(0.01, 0.05, d))).q;
    CHECK(q <= previous + 1e-12);
    previous = q;
  }
}

TEST_CASE("half the single-copy bound dominates the helstrom error") {
  std::mt19937_64 gen(38);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = testutil::draw_params(gen, 0.1, 8);
    const auto pair = (trial % 2 == 0)
                          ? unentangled_pair(p, SignalSpec::uniform(p.mode_count))
                          : entangled_pair(p);
    const double q = chernoff_numeric(pair).q;
    const double p_err = helstrom(pair, 0.5, 0.5).p_error;
    CHECK(0.5 * q >= p_err - 1e-10);
  }
}

TEST_CASE("regime classification follows the signal-to-noise ratio") {
  const auto bad = classify_regime(0.01, 0.1, 1, Kind::Unentangled);
  CHECK(bad.value == Regime::Bad);
  CHECK(bad.ratio == doctest::Approx(0.1).epsilon(1e-14));
  const auto good = classify_regime(0.01, 0.1, 100, Kind::Entangled);
  CHECK(good.value == Regime::Good);
  CHECK(good.ratio == doctest::Approx(10.0).epsilon(1e-14));
  const auto tie = classify_regime(0.1, 0.1, 1, Kind::Unentangled);
  CHECK(tie.value == Regime::Bad);
  const auto noiseless = classify_regime(0.1, 0.0, 1, Kind::Unentangled);
  CHECK(noiseless.value == Regime::Good);
  CHECK(std::isinf(noiseless.ratio));
}

TEST_CASE("conditional probabilities substitute the outcome models") {
  const auto u = conditional_probs(make_params(0.1, 0.01, 4), Kind::Unentangled);
  CHECK(u.p_yes_given_absent == doctest::Approx(0.01).epsilon(1e-14));
  CHECK(u.p_yes_given_present == doctest::Approx(0.109).epsilon(1e-14));
  const auto e = conditional_probs(make_params(0.1, 0.01, 4), Kind::Entangled);
  CHECK(e.p_yes_given_absent == doctest::Approx(0.0025).epsilon(1e-14));
  CHECK(e.p_yes_given_present == doctest::Approx(0.10225).epsilon(1e-14));
  const auto flat = conditional_probs(make_params(0.0, 0.01, 4), Kind::Unentangled);
  CHECK(flat.p_yes_given_absent == flat.p_yes_given_present);
}

TEST_CASE("classical bernoulli bound coincides with the quantum one") {
  TrialOutcomeModel same;
  same.p_yes_given_absent = 0.3;
  same.p_yes_given_present = 0.3;
  CHECK(classical_chernoff_bernoulli(same).q == doctest::Approx(1.0).epsilon(1e-10));

  const auto model = conditional_probs(make_params(0.01, 0.1, 1), Kind::Unentangled);
  const double q_classical = classical_chernoff_bernoulli(model).q;
  const double q_quantum = chernoff_numeric(unent(0.01, 0.1, 1)).q;
  CHECK(std::abs(q_classical - q_quantum) <= coincidence_band(0.01, 0.1));

  const auto ent_model =
      conditional_probs(make_params(0.01, 0.1, 100), Kind::Entangled);
  const double q_ent_classical = classical_chernoff_bernoulli(ent_model).q;
  const double q_ent_quantum = chernoff_numeric(unent(0.01, 0.001, 1)).q;
  const double band = 5.0 * (0.001 * 0.001 + 0.01 * 0.001 + 0.01 * 0.1);
  CHECK(std::abs(q_ent_classical - q_ent_quantum) <= band);
}

TEST_CASE("classical-quantum coincidence holds over random draws") {
  std::mt19937_64 gen(39);
  for (int trial = 0; trial < 8; ++trial) {
    auto p = testutil::draw_params(gen, 0.1, 6);
    p.reflectivity = std::min(p.reflectivity, 0.1);
    const auto model = conditional_probs(p, Kind::Unentangled);
    const double q_classical = classical_chernoff_bernoulli(model).q;
    const double q_quantum =
        chernoff_numeric(unentangled_pair(p, SignalSpec::uniform(p.mode_count))).q;
    CHECK(std::abs(q_classical - q_quantum) <=
          coincidence_band(p.reflectivity, p.thermal_weight));
  }
}

TEST_CASE("trials_needed inverts the error bound") {
  CHECK(trials_needed(0.5, 0.25) == 1);
  CHECK(trials_needed(0.99, 0.01) == 390);
  CHECK(trials_needed(0.999875, 0.01) == 31295);
  CHECK_THROWS_AS(trials_needed(1.0, 0.01), DomainError);
  CHECK_THROWS_AS(trials_needed(0.0, 0.01), DomainError);
  CHECK_THROWS_AS(trials_needed(0.5, 0.5), DomainError);
  CHECK_THROWS_AS(trials_needed(0.5, 0.0), DomainError);
}

TEST_CASE("trials at the regime scales reproduce the quoted orders") {
  // good regime: q = 1 - eta gives the 1/eta scale times ln(1/2 eps)
  CHECK(trials_needed(1.0 - 0.01, 0.01) == 390);
  // bad regime: q = 1 - eta^2/(8b) gives the 8b/eta^2 scale
  const long long n = trials_needed(1.0 - 0.01 * 0.01 / (8.0 * 0.1), 0.01);
  CHECK(n > 8000 * 3);
  CHECK(n < 8000 * 4);
}
