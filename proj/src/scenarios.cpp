// SPDX-License-Identifier: Apache-2.0
#include "qillum/scenarios.hpp"

#include <cmath>
#include <cstdint>
#include <utility>

namespace qillum {

const char* to_string(Kind kind) {
  return kind == Kind::Unentangled ? "unentangled" : "entangled";
}

void ScenarioParams::validate() const {
  if (!(reflectivity >= 0.0 && reflectivity <= 1.0)) {
    throw DomainError("reflectivity must lie in [0,1], got " +
                      std::to_string(reflectivity));
  }
  if (!(thermal_weight >= 0.0)) {
    throw DomainError("thermal weight must be nonnegative, got " +
                      std::to_string(thermal_weight));
  }
  if (mode_count < 1) {
    throw DomainError("mode count must be at least 1, got " +
                      std::to_string(mode_count));
  }
  if (!(prior_absent >= 0.0 && prior_absent <= 1.0)) {
    throw DomainError("prior must lie in [0,1], got " + std::to_string(prior_absent));
  }
}

namespace {

// State construction needs the one-photon sector to carry less than half the
// weight; the outcome-model formulas stay valid beyond that, so this guard
// lives with the constructors rather than in ScenarioParams::validate.
void require_single_photon_domain(const ScenarioParams& params) {
  const double total_noise = params.mode_count * params.thermal_weight;
  if (!(total_noise < 0.5)) {
    throw DomainError(
        "single-photon approximation needs mode_count * thermal_weight < 0.5, got " +
        std::to_string(total_noise));
  }
}

}  // namespace

SignalSpec::SignalSpec(Eigen::VectorXcd amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) {
    throw DomainError("signal state needs at least one mode amplitude");
  }
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > 1e-12) {
    throw DomainError("signal amplitudes have norm " + std::to_string(norm) +
                      ", expected 1");
  }
  amplitudes_ /= norm;
}

SignalSpec SignalSpec::uniform(int mode_count) {
  if (mode_count < 1) {
    throw DomainError("uniform signal state needs mode_count >= 1");
  }
  return SignalSpec(Eigen::VectorXcd::Constant(
      mode_count, 1.0 / std::sqrt(static_cast<double>(mode_count))));
}

namespace {

DensityMatrix signal_noise_state(const ScenarioParams& params) {
  const int d = params.mode_count;
  const double b = params.thermal_weight;
  Eigen::VectorXd diag(d + 1);
  diag(0) = 1.0 - d * b;
  for (int k = 1; k <= d; ++k) diag(k) = b;
  Eigen::MatrixXcd m = diag.cast<std::complex<double>>().asDiagonal();
  return DensityMatrix(HermitianOperator(std::move(m), signal_basis(d)));
}

}  // namespace

HypothesisPair unentangled_pair(const ScenarioParams& params, const SignalSpec& psi) {
  params.validate();
  require_single_photon_domain(params);
  if (psi.mode_count() != params.mode_count) {
    throw StructuralError("signal state has " + std::to_string(psi.mode_count()) +
                          " modes but the scenario declares " +
                          std::to_string(params.mode_count));
  }
  const int d = params.mode_count;
  const double eta = params.reflectivity;

  DensityMatrix absent = signal_noise_state(params);

  Eigen::VectorXcd psi_full = Eigen::VectorXcd::Zero(d + 1);
  psi_full.tail(d) = psi.amplitudes();
  Eigen::MatrixXcd present_m = (1.0 - eta) * absent.entries() +
                               eta * (psi_full * psi_full.adjoint());
  present_m = 0.5 * (present_m + present_m.adjoint()).eval();
  DensityMatrix present(HermitianOperator(std::move(present_m), absent.basis()));
  return HypothesisPair{std::move(absent), std::move(present), Kind::Unentangled};
}

HypothesisPair entangled_pair(const ScenarioParams& params, int dimension_cap) {
  params.validate();
  require_single_photon_domain(params);
  const int d = params.mode_count;
  const double eta = params.reflectivity;
  const long long joint_dim = static_cast<long long>(d + 1) * d;
  if (joint_dim > dimension_cap) {
    throw CapacityError("joint dimension " + std::to_string(joint_dim) +
                        " exceeds the cap of " + std::to_string(dimension_cap));
  }

  DensityMatrix signal_absent = signal_noise_state(params);
  const Basis anc = ancilla_basis(d);
  HermitianOperator mixed_ancilla(
      Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d), anc);
  HermitianOperator joint_absent = tensor(signal_absent.op(), mixed_ancilla);
  DensityMatrix absent(joint_absent);

  // Maximally correlated pair: (1/sqrt d) sum_k |k>_S |k>_A in the joint
  // signal-major ordering, where signal index k sits at row k (0 = vacuum).
  Eigen::VectorXcd pair_vec = Eigen::VectorXcd::Zero(joint_dim);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int k = 1; k <= d; ++k) {
    pair_vec(static_cast<Eigen::Index>(k) * d + (k - 1)) = amp;
  }

  Eigen::MatrixXcd present_m = (1.0 - eta) * absent.entries() +
                               eta * (pair_vec * pair_vec.adjoint());
  present_m = 0.5 * (present_m + present_m.adjoint()).eval();
  DensityMatrix present(HermitianOperator(std::move(present_m), absent.basis()));
  return HypothesisPair{std::move(absent), std::move(present), Kind::Entangled};
}

namespace {

double geometric_ratio(double thermal_weight) {
  if (thermal_weight < 0.0 || thermal_weight >= 0.25) {
    throw DomainError("no physical geometric ratio solves weight = (1-r)r for weight " +
                      std::to_string(thermal_weight) + " (needs [0, 0.25))");
  }
  return (1.0 - std::sqrt(1.0 - 4.0 * thermal_weight)) / 2.0;
}

}  // namespace

DensityMatrix exact_thermal(double thermal_weight, int mode_count, int max_occupation,
                            int dimension_cap) {
  if (mode_count < 1) throw DomainError("thermal state needs mode_count >= 1");
  if (max_occupation < 2) throw DomainError("thermal truncation needs max_occupation >= 2");
  if (!(thermal_weight < 0.3)) {
    throw DomainError("thermal weight " + std::to_string(thermal_weight) +
                      " outside the truncated-state domain (< 0.3)");
  }
  const double lambda = geometric_ratio(thermal_weight);

  const int levels = max_occupation + 1;
  double dim_check = 1.0;
  for (int m = 0; m < mode_count; ++m) {
    dim_check *= levels;
    if (dim_check > dimension_cap) {
      throw CapacityError("thermal basis of " + std::to_string(levels) + "^" +
                          std::to_string(mode_count) + " states exceeds the cap of " +
                          std::to_string(dimension_cap));
    }
  }
  const long long dim = static_cast<long long>(dim_check);

  // Per-mode truncated geometric weights, renormalized.
  std::vector<double> w(levels);
  double norm = 0.0;
  for (int n = 0; n < levels; ++n) {
    w[n] = (1.0 - lambda) * std::pow(lambda, n);
    norm += w[n];
  }
  for (double& v : w) v /= norm;

  Eigen::VectorXd diag(dim);
  Basis basis;
  basis.reserve(static_cast<std::size_t>(dim));
  std::vector<int> occ(mode_count, 0);
  for (long long idx = 0; idx < dim; ++idx) {
    long long rest = idx;
    double weight = 1.0;
    for (int m = mode_count - 1; m >= 0; --m) {
      occ[m] = static_cast<int>(rest % levels);
      rest /= levels;
      weight *= w[occ[m]];
    }
    diag(idx) = weight;
    basis.push_back(BasisLabel::fock(occ));
  }

  Eigen::MatrixXcd m = diag.cast<std::complex<double>>().asDiagonal();
  return DensityMatrix(HermitianOperator(std::move(m), std::move(basis)));
}

double approximation_gap(const ScenarioParams& params, int max_occupation) {
  params.validate();
  require_single_photon_domain(params);
  const int d = params.mode_count;
  const double b = params.thermal_weight;
  if (b == 0.0) return 0.0;

  const DensityMatrix thermal = exact_thermal(b, d, max_occupation);
  const int levels = max_occupation + 1;

  // Compress onto {vacuum, one photon in mode k, everything else}: the
  // thermal state is diagonal in the occupation basis, so sector weights
  // are plain sums.
  double vacuum_weight = 0.0;
  Eigen::VectorXd single_weight = Eigen::VectorXd::Zero(d);
  const auto& diag = thermal.entries().diagonal();
  for (Eigen::Index idx = 0; idx < diag.size(); ++idx) {
    long long rest = idx;
    int total = 0;
    int which = -1;
    for (int m = d - 1; m >= 0; --m) {
      const int n = static_cast<int>(rest % levels);
      rest /= levels;
      total += n;
      if (n == 1) which = m;
    }
    if (total == 0) {
      vacuum_weight += diag(idx).real();
    } else if (total == 1) {
      single_weight(which) += diag(idx).real();
    }
  }
  const double overflow = 1.0 - vacuum_weight - single_weight.sum();

  // Common sector basis [vacuum, modes, overflow]; the approximation has
  // zero overflow weight by construction.
  Eigen::VectorXd exact_diag(d + 2);
  exact_diag(0) = vacuum_weight;
  exact_diag.segment(1, d) = single_weight;
  exact_diag(d + 1) = overflow;

  Eigen::VectorXd approx_diag(d + 2);
  approx_diag(0) = 1.0 - d * b;
  approx_diag.segment(1, d).setConstant(b);
  approx_diag(d + 1) = 0.0;

  // Both diagonal in the shared sector basis; half trace distance keeps the
  // gap on the probability scale the quadratic claim refers to.
  return 0.5 * (exact_diag - approx_diag).cwiseAbs().sum();
}

double ebits(int mode_count) {
  if (mode_count < 1) throw DomainError("ebits needs mode_count >= 1");
  return std::log2(static_cast<double>(mode_count));
}

double thermal_mode_weight(double energy_ratio) {
  if (!(energy_ratio > 0.0)) {
    throw DomainError("energy ratio must be positive, got " +
                      std::to_string(energy_ratio));
  }
  const double decay = std::exp(-energy_ratio);
  return (1.0 - decay) * decay;
}

}  // namespace qillum
