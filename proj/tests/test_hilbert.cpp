// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qillum/discrimination.hpp"
#include "qillum/hilbert.hpp"
#include "qillum/scenarios.hpp"

using namespace qillum;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;

namespace {

ScenarioParams make_params(double eta, double b, int d) {
  ScenarioParams p;
  p.reflectivity = eta;
  p.thermal_weight = b;
  p.mode_count = d;
  return p;
}

}  // namespace

TEST_CASE("tensor of identities is the identity") {
  const auto a = HermitianOperator::identity(signal_basis(1));
  const auto b = HermitianOperator::identity(signal_basis(2));
  const auto t = tensor(a, b);
  CHECK(t.dim() == 6);
  CHECK((t.entries() - MatrixXcd::Identity(6, 6)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("tensor basis is left-index major with joint labels") {
  const auto a = HermitianOperator::identity(signal_basis(2));
  const auto anc = HermitianOperator::identity(ancilla_basis(2));
  const auto t = tensor(a, anc);
  REQUIRE(t.basis().size() == 6);
  CHECK(t.basis()[0] == BasisLabel::joint(BasisLabel::signal_vacuum(),
                                          BasisLabel::ancilla_mode(1)));
  CHECK(t.basis()[1] == BasisLabel::joint(BasisLabel::signal_vacuum(),
                                          BasisLabel::ancilla_mode(2)));
  CHECK(t.basis()[2] == BasisLabel::joint(BasisLabel::signal_mode(1),
                                          BasisLabel::ancilla_mode(1)));
  CHECK(t.basis()[5] == BasisLabel::joint(BasisLabel::signal_mode(2),
                                          BasisLabel::ancilla_mode(2)));
}

TEST_CASE("rank-1 projector tensored with a mixed ancilla spreads the rank") {
  const int d = 3;
  MatrixXcd proj = MatrixXcd::Zero(2, 2);
  proj(0, 0) = 1.0;
  const HermitianOperator pure(proj, signal_basis(1));
  const auto mixed = HermitianOperator(
      MatrixXcd::Identity(d, d) / static_cast<double>(d), ancilla_basis(d));
  const DensityMatrix joint(tensor(pure, mixed));
  const Spectrum sp = eig_hermitian(joint.op());
  for (int i = 0; i < d; ++i) CHECK(sp.eigenvalues(i) == doctest::Approx(1.0 / d).epsilon(1e-12));
  for (int i = d; i < 2 * d; ++i) CHECK(std::abs(sp.eigenvalues(i)) <= 1e-12);
}

TEST_CASE("noise state tensored with a mixed ancilla has the expected diagonal") {
  const auto pair = unentangled_pair(make_params(0.0, 0.01, 2), SignalSpec::uniform(2));
  const auto mixed = HermitianOperator(MatrixXcd::Identity(2, 2) / 2.0, ancilla_basis(2));
  const auto t = tensor(pair.absent.op(), mixed);
  const double expected[] = {0.49, 0.49, 0.005, 0.005, 0.005, 0.005};
  for (int i = 0; i < 6; ++i) {
    CHECK(t.entries()(i, i).real() == doctest::Approx(expected[i]).epsilon(1e-12));
  }
}

TEST_CASE("eig returns descending eigenvalues for a diagonal operator") {
  MatrixXcd m = MatrixXcd::Zero(2, 2);
  m(0, 0) = 0.2;
  m(1, 1) = 0.8;
  const Spectrum sp = eig_hermitian(HermitianOperator(m, signal_basis(1)));
  CHECK(sp.eigenvalues(0) == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(sp.eigenvalues(1) == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("rank-1 projector has spectrum (1, 0, ..., 0)") {
  std::mt19937_64 gen(11);
  const VectorXcd v = testutil::random_unit_vector(5, gen);
  const MatrixXcd proj = v * v.adjoint();
  const Spectrum sp = eig_hermitian(HermitianOperator(proj, signal_basis(4)));
  CHECK(sp.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-12));
  for (int i = 1; i < 5; ++i) CHECK(std::abs(sp.eigenvalues(i)) <= 1e-12);
}

TEST_CASE("present-state spectrum matches the closed form") {
  const auto pair = unentangled_pair(make_params(0.1, 0.01, 4), SignalSpec::uniform(4));
  const Spectrum sp = eig_hermitian(pair.present.op());
  const auto expected = oracle::unentangled_present_spectrum(0.1, 0.01, 4);
  REQUIRE(static_cast<size_t>(sp.eigenvalues.size()) == expected.size());
  for (size_t i = 0; i < expected.size(); ++i) {
    CHECK(sp.eigenvalues(static_cast<int>(i)) ==
          doctest::Approx(expected[i]).epsilon(1e-12));
  }
  CHECK(sp.eigenvalues.sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("spectra reconstruct the input and the eigenvector matrix is unitary") {
  std::mt19937_64 gen(12);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 7);
    const MatrixXcd m = testutil::random_hermitian(n, gen);
    const HermitianOperator h(m, signal_basis(n - 1));
    const Spectrum sp = eig_hermitian(h);
    const MatrixXcd rebuilt =
        sp.eigenvectors * sp.eigenvalues.asDiagonal() * sp.eigenvectors.adjoint();
    CHECK((rebuilt - m).cwiseAbs().maxCoeff() <= 1e-10);
    const MatrixXcd gram = sp.eigenvectors.adjoint() * sp.eigenvectors;
    CHECK((gram - MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-10);
    for (int i = 1; i < n; ++i) CHECK(sp.eigenvalues(i - 1) >= sp.eigenvalues(i));
  }
}

TEST_CASE("dm_power at the exponent endpoints") {
  const auto rho = testutil::diagonal_state({0.5, 0.5, 0.0});
  SUBCASE("s = 1 returns the state") {
    const auto p = dm_power(rho, 1.0);
    CHECK((p.entries() - rho.entries()).cwiseAbs().maxCoeff() <= 1e-12);
  }
  SUBCASE("s = 0 returns the support projector") {
    const auto p = dm_power(rho, 0.0);
    MatrixXcd expected = MatrixXcd::Zero(3, 3);
    expected(0, 0) = 1.0;
    expected(1, 1) = 1.0;
    CHECK((p.entries() - expected).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("dm_power takes scalar roots on the diagonal") {
  const auto rho = testutil::diagonal_state({0.25, 0.75});
  const auto p = dm_power(rho, 0.5);
  CHECK(p.entries()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p.entries()(1, 1).real() ==
        doctest::Approx(0.8660254037844386).epsilon(1e-12));
}

TEST_CASE("dm_power rejects exponents outside [0,1]") {
  const auto rho = testutil::diagonal_state({0.25, 0.75});
  CHECK_THROWS_AS(dm_power(rho, -0.1), DomainError);
  CHECK_THROWS_AS(dm_power(rho, 1.1), DomainError);
}

TEST_CASE("trace distance basics") {
  const auto a = testutil::diagonal_state({1.0, 0.0});
  const auto b = testutil::diagonal_state({0.0, 1.0});
  CHECK(trace_distance(a, a) <= 1e-12);
  CHECK(trace_distance(a, b) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("trace distance of the hypothesis pair matches 2 eta (1-b)") {
  const auto pair = unentangled_pair(make_params(0.1, 0.01, 4), SignalSpec::uniform(4));
  CHECK(trace_distance(pair.present, pair.absent) ==
        doctest::Approx(0.198).epsilon(1e-10));
}

TEST_CASE("trace distance closed form holds over random draws") {
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 25; ++trial) {
    const auto p = testutil::draw_params(gen);
    const auto pair = unentangled_pair(p, SignalSpec::uniform(p.mode_count));
    const double expected =
        oracle::trace_distance_unentangled(p.reflectivity, p.thermal_weight);
    const double forward = trace_distance(pair.present, pair.absent);
    const double backward = trace_distance(pair.absent, pair.present);
    CHECK(std::abs(forward - expected) <= 1e-10);
    CHECK(forward == doctest::Approx(backward).epsilon(1e-12));
    CHECK(forward >= 0.0);
    CHECK(forward <= 2.0);
  }
}

TEST_CASE("trace distance refuses mismatched bases") {
  const auto a = testutil::diagonal_state({1.0, 0.0, 0.0});
  const auto b = exact_thermal(0.01, 1, 2);
  REQUIRE(a.dim() == b.dim());
  CHECK_THROWS_AS(trace_distance(a, b), StructuralError);
}

TEST_CASE("positive part of the hypothesis difference is the signal projector") {
  const int d = 4;
  const auto psi = SignalSpec::uniform(d);
  const auto pair = unentangled_pair(make_params(0.1, 0.01, d), psi);
  const HermitianOperator delta(pair.present.entries() - pair.absent.entries(),
                                pair.present.basis());
  const auto proj = positive_part_projector(delta);
  VectorXcd embedded = VectorXcd::Zero(d + 1);
  embedded.tail(d) = psi.amplitudes();
  const MatrixXcd expected = embedded * embedded.adjoint();
  CHECK((proj.entries() - expected).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("positive part of definite-sign operators") {
  const auto neg = HermitianOperator(-MatrixXcd::Identity(3, 3), signal_basis(2));
  CHECK(positive_part_projector(neg).entries().cwiseAbs().maxCoeff() <= 1e-12);
  MatrixXcd m = MatrixXcd::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  const auto proj = positive_part_projector(HermitianOperator(m, signal_basis(1)));
  CHECK(proj.entries()(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(proj.entries()(1, 1)) <= 1e-12);
}

TEST_CASE("positive part projector splits the operator by sign") {
  std::mt19937_64 gen(14);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 5);
    const MatrixXcd m = testutil::random_hermitian(n, gen);
    const HermitianOperator delta(m, signal_basis(n - 1));
    const auto proj = positive_part_projector(delta);
    const MatrixXcd p = proj.entries();
    CHECK((p * p - p).cwiseAbs().maxCoeff() <= 1e-10);
    const MatrixXcd inside = p * m * p;
    const MatrixXcd outside =
        (MatrixXcd::Identity(n, n) - p) * m * (MatrixXcd::Identity(n, n) - p);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> in_eig(inside, Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> out_eig(outside, Eigen::EigenvaluesOnly);
    CHECK(in_eig.eigenvalues().minCoeff() >= -1e-10);
    CHECK(out_eig.eigenvalues().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("construction rejects malformed operators and states") {
  MatrixXcd skew = MatrixXcd::Zero(2, 2);
  skew(0, 1) = 1.0;
  CHECK_THROWS_AS(HermitianOperator(skew, signal_basis(1)), StructuralError);
  CHECK_THROWS_AS(HermitianOperator(MatrixXcd::Identity(2, 2), signal_basis(2)),
                  StructuralError);
  MatrixXcd wrong_trace = MatrixXcd::Identity(2, 2) * 0.6;
  CHECK_THROWS_AS(DensityMatrix(HermitianOperator(wrong_trace, signal_basis(1))),
                  NumericalError);
  MatrixXcd indefinite = MatrixXcd::Zero(2, 2);
  indefinite(0, 0) = 1.5;
  indefinite(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix(HermitianOperator(indefinite, signal_basis(1))),
                  NumericalError);
}

TEST_CASE("real_trace_product matches the direct product trace") {
  std::mt19937_64 gen(15);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 4);
    const MatrixXcd a = testutil::random_hermitian(n, gen);
    const MatrixXcd b = testutil::random_hermitian(n, gen);
    const HermitianOperator ha(a, signal_basis(n - 1));
    const HermitianOperator hb(b, signal_basis(n - 1));
    const double direct = (a * b).trace().real();
    CHECK(real_trace_product(ha, hb) == doctest::Approx(direct).epsilon(1e-10));
  }
}
