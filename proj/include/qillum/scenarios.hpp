// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

#include "qillum/hilbert.hpp"

namespace qillum {

enum class Kind { Unentangled, Entangled };

const char* to_string(Kind kind);

/// Scalar inputs of a detection scenario.
struct ScenarioParams {
  double reflectivity = 0.0;    // chance the probe photon returns when the object is there
  double thermal_weight = 0.0;  // one-photon weight of each background mode
  int mode_count = 1;           // distinguishable modes per detection window
  double prior_absent = 0.5;

  double prior_present() const { return 1.0 - prior_absent; }

  /// Throws DomainError unless reflectivity and prior lie in [0,1],
  /// thermal_weight >= 0, and mode_count >= 1. The single-photon
  /// approximation guard (mode_count * thermal_weight < 0.5) is enforced by
  /// the state constructors, not here: the per-shot outcome formulas stay
  /// meaningful beyond it.
  void validate() const;
};

/// Single-photon probe state: amplitudes over the signal modes.
class SignalSpec {
 public:
  /// Normalizes on construction; throws DomainError when the input norm
  /// deviates from 1 by more than 1e-12 or the vector is empty.
  explicit SignalSpec(Eigen::VectorXcd amplitudes);

  static SignalSpec uniform(int mode_count);

  int mode_count() const { return static_cast<int>(amplitudes_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }

 private:
  Eigen::VectorXcd amplitudes_;
};

/// The two hypothesis states of one scenario, on a shared basis.
struct HypothesisPair {
  DensityMatrix absent;
  DensityMatrix present;
  Kind kind;
};

/// Signal-only hypothesis states: absent = (1-db)|vac><vac| + b sum_k |k><k|,
/// present = (1-eta) absent + eta |psi><psi|. Dimension d+1.
HypothesisPair unentangled_pair(const ScenarioParams& params, const SignalSpec& psi);

/// Signal+ancilla states: absent = rho_absent (x) I/d, present mixes in the
/// maximally correlated single-photon pair state. Dimension d(d+1).
HypothesisPair entangled_pair(const ScenarioParams& params,
                              int dimension_cap = kDefaultDimensionCap);

/// Truncated multimode thermal state in the FockTuple basis: per mode,
/// occupation n carries weight (1-lambda) lambda^n renormalized over
/// n <= max_occupation, with lambda the smaller root of
/// thermal_weight = (1-lambda) lambda.
DensityMatrix exact_thermal(double thermal_weight, int mode_count, int max_occupation,
                            int dimension_cap = kDefaultDimensionCap);

/// Half trace distance between the exact truncated thermal state (compressed
/// onto the {vacuum, one photon, overflow} sectors) and the single-photon
/// approximation padded with zero overflow weight.
double approximation_gap(const ScenarioParams& params, int max_occupation);

/// Entanglement content of d maximally correlated modes: log2(d).
double ebits(int mode_count);

/// One-photon weight of a thermal mode at energy ratio x: (1-e^-x) e^-x.
double thermal_mode_weight(double energy_ratio);

}  // namespace qillum
