// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qillum/scenarios.hpp"

namespace qillum {

/// Optimal single-shot test between the two hypotheses.
struct HelstromResult {
  double p_error = 0.0;
  HermitianOperator measurement;  // the yes-projector
};

/// Minimized overlap bound q = min_s tr rho_absent^{1-s} rho_present^s.
struct ChernoffResult {
  double q = 1.0;
  double s_star = 0.0;
  double exponent = 0.0;  // -ln q
};

/// Per-shot yes/no probabilities under each hypothesis.
struct TrialOutcomeModel {
  double p_yes_given_absent = 0.0;
  double p_yes_given_present = 0.0;
  Kind kind = Kind::Unentangled;
};

enum class Regime { Good, Bad };

const char* to_string(Regime regime);

/// Signal-to-noise classification with the ratio that decided it.
struct RegimeLabel {
  Regime value = Regime::Bad;
  double ratio = 0.0;
};

/// Minimum-error measurement: project onto the positive part of
/// prior_present * present - prior_absent * absent. For equal priors the
/// error reduces to 1/2 - trace_distance/4.
HelstromResult helstrom(const HypothesisPair& pair, double prior_absent,
                        double prior_present);

/// tr(absent^{1-s} present^s) for s in [0,1].
double chernoff_overlap(const DensityMatrix& absent, const DensityMatrix& present,
                        double s);

/// Minimize the overlap over s by 65-point grid plus golden-section
/// refinement to |delta s| <= 1e-8.
ChernoffResult chernoff_numeric(const HypothesisPair& pair);

/// Closed-form reduced bound for the signal-only states: minimizes
/// f(s) = 1 - eta s + b(-1 + (1 + eta/b)^s) at the analytic stationary
/// point, clamped to [0,1]. thermal_weight = 0 returns the limiting value
/// 1 - reflectivity at s = 1.
ChernoffResult chernoff_analytic_unentangled(double reflectivity,
                                             double thermal_weight);

/// Entangled reduced bound: the unentangled closed form with the thermal
/// weight divided by the mode count (same code path, exact identity).
ChernoffResult chernoff_analytic_entangled(double reflectivity,
                                           double thermal_weight, int mode_count);

/// Good iff reflectivity/thermal_weight (unentangled) or
/// reflectivity*mode_count/thermal_weight (entangled) exceeds 1; ties are
/// Bad; thermal_weight = 0 is Good with an infinite ratio.
RegimeLabel classify_regime(double reflectivity, double thermal_weight,
                            int mode_count, Kind kind);

/// Per-shot outcome probabilities: unentangled yes|absent = b,
/// yes|present = b(1-eta) + eta; entangled replaces b by b/d.
TrialOutcomeModel conditional_probs(const ScenarioParams& params, Kind kind);

/// Chernoff bound of the induced two-outcome classical model.
ChernoffResult classical_chernoff_bernoulli(const TrialOutcomeModel& model);

/// Smallest n with (1/2) q^n <= epsilon. Throws DomainError at q >= 1.
long long trials_needed(double q, double epsilon);

}  // namespace qillum
