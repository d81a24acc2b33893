// SPDX-License-Identifier: Apache-2.0
// Shared test utilities: seeded parameter draws and ad-hoc operators.
#pragma once

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qillum/hilbert.hpp"
#include "qillum/scenarios.hpp"

namespace testutil {

// Random scenario with db <= max_db so both pair constructors accept it.
inline qillum::ScenarioParams draw_params(std::mt19937_64& gen, double max_db = 0.1,
                                          int max_d = 16) {
  std::uniform_real_distribution<double> eta_dist(1e-3, 0.2);
  std::uniform_real_distribution<double> b_dist(1e-4, 0.1);
  std::uniform_int_distribution<int> d_dist(1, max_d);
  qillum::ScenarioParams p;
  for (;;) {
    p.reflectivity = eta_dist(gen);
    p.thermal_weight = b_dist(gen);
    p.mode_count = d_dist(gen);
    if (p.mode_count * p.thermal_weight <= max_db) return p;
  }
}

inline Eigen::MatrixXcd random_hermitian(int n, std::mt19937_64& gen) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a(i, j) = std::complex<double>(dist(gen), dist(gen));
    }
  }
  return 0.5 * (a + a.adjoint().eval());
}

inline Eigen::VectorXcd random_unit_vector(int n, std::mt19937_64& gen) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v(i) = std::complex<double>(dist(gen), dist(gen));
  return v / v.norm();
}

// Diagonal density matrix on the signal basis of size n.
inline qillum::DensityMatrix diagonal_state(const std::vector<double>& weights) {
  const int n = static_cast<int>(weights.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = weights[static_cast<std::size_t>(i)];
  return qillum::DensityMatrix(
      qillum::HermitianOperator(m, qillum::signal_basis(n - 1)));
}

}  // namespace testutil
