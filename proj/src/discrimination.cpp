// SPDX-License-Identifier: Apache-2.0
#include "qillum/discrimination.hpp"

#include <cmath>
#include <limits>

#include "qillum/optimize.hpp"

namespace qillum {

const char* to_string(Regime regime) {
  return regime == Regime::Good ? "good" : "bad";
}

namespace {

void check_priors(double prior_absent, double prior_present) {
  if (!(prior_absent >= 0.0 && prior_absent <= 1.0) ||
      !(prior_present >= 0.0 && prior_present <= 1.0) ||
      std::abs(prior_absent + prior_present - 1.0) > 1e-12) {
    throw DomainError("priors must lie in [0,1] and sum to 1");
  }
}

// Shared spectral data for evaluating the overlap at many exponents
// without repeating the eigensolves.
struct OverlapEvaluator {
  Eigen::VectorXd lam_absent;
  Eigen::VectorXd lam_present;
  Eigen::MatrixXd weight;  // |<absent vector i | present vector j>|^2

  OverlapEvaluator(const DensityMatrix& absent, const DensityMatrix& present) {
    if (absent.basis() != present.basis()) {
      throw StructuralError("overlap bound requires states on the same basis");
    }
    const Spectrum sa = eig_hermitian(absent.op());
    const Spectrum sp = eig_hermitian(present.op());
    lam_absent = sa.eigenvalues;
    lam_present = sp.eigenvalues;
    weight = (sa.eigenvectors.adjoint() * sp.eigenvectors).cwiseAbs2();
  }

  double operator()(double s) const {
    Eigen::VectorXd a(lam_absent.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      const double l = lam_absent(i);
      a(i) = l <= kPsdClipTol ? 0.0 : std::pow(l, 1.0 - s);
    }
    Eigen::VectorXd p(lam_present.size());
    for (Eigen::Index j = 0; j < p.size(); ++j) {
      const double l = lam_present(j);
      p(j) = l <= kPsdClipTol ? 0.0 : std::pow(l, s);
    }
    return a.dot(weight * p);
  }
};

void check_exponent(double s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw DomainError("overlap exponent must lie in [0,1], got " + std::to_string(s));
  }
}

}  // namespace

HelstromResult helstrom(const HypothesisPair& pair, double prior_absent,
                        double prior_present) {
  check_priors(prior_absent, prior_present);
  if (pair.absent.basis() != pair.present.basis()) {
    throw StructuralError("hypothesis pair members disagree on the basis");
  }
  HermitianOperator delta(prior_present * pair.present.entries() -
                              prior_absent * pair.absent.entries(),
                          pair.absent.basis());
  HermitianOperator yes = positive_part_projector(delta);
  const double p_error =
      prior_absent * real_trace_product(yes, pair.absent.op()) +
      prior_present * (1.0 - real_trace_product(yes, pair.present.op()));
  return HelstromResult{p_error, std::move(yes)};
}

double chernoff_overlap(const DensityMatrix& absent, const DensityMatrix& present,
                        double s) {
  check_exponent(s);
  return OverlapEvaluator(absent, present)(s);
}

ChernoffResult chernoff_numeric(const HypothesisPair& pair) {
  const OverlapEvaluator eval(pair.absent, pair.present);
  const MinimizeResult best =
      minimize_grid_golden([&eval](double s) { return eval(s); }, 0.0, 1.0);
  return ChernoffResult{best.value, best.x, -std::log(best.value)};
}

ChernoffResult chernoff_analytic_unentangled(double reflectivity,
                                             double thermal_weight) {
  if (!(reflectivity >= 0.0 && reflectivity <= 1.0)) {
    throw DomainError("reflectivity must lie in [0,1]");
  }
  if (!(thermal_weight >= 0.0)) {
    throw DomainError("thermal weight must be nonnegative");
  }
  if (thermal_weight == 0.0) {
    // Noiseless limit: the infimum 1 - reflectivity sits at the s = 1 edge.
    const double q = 1.0 - reflectivity;
    return ChernoffResult{q, 1.0, -std::log(q)};
  }
  if (reflectivity == 0.0) {
    return ChernoffResult{1.0, 0.0, 0.0};
  }

  const double ratio = reflectivity / thermal_weight;
  const double log_growth = std::log1p(ratio);
  const auto value = [&](double s) {
    return 1.0 - reflectivity * s + thermal_weight * std::expm1(s * log_growth);
  };

  double s_star = std::log(ratio / log_growth) / log_growth;
  if (s_star < 0.0) s_star = 0.0;
  if (s_star > 1.0) s_star = 1.0;

  double best_s = s_star;
  double best_q = value(s_star);
  for (double endpoint : {0.0, 1.0}) {
    const double v = value(endpoint);
    if (v < best_q) {
      best_q = v;
      best_s = endpoint;
    }
  }
  return ChernoffResult{best_q, best_s, -std::log(best_q)};
}

ChernoffResult chernoff_analytic_entangled(double reflectivity,
                                           double thermal_weight, int mode_count) {
  if (mode_count < 1) throw DomainError("mode count must be at least 1");
  return chernoff_analytic_unentangled(reflectivity, thermal_weight / mode_count);
}

RegimeLabel classify_regime(double reflectivity, double thermal_weight,
                            int mode_count, Kind kind) {
  if (!(thermal_weight >= 0.0)) {
    throw DomainError("thermal weight must be nonnegative");
  }
  if (mode_count < 1) throw DomainError("mode count must be at least 1");
  if (thermal_weight == 0.0) {
    return RegimeLabel{Regime::Good, std::numeric_limits<double>::infinity()};
  }
  const double ratio = kind == Kind::Unentangled
                           ? reflectivity / thermal_weight
                           : reflectivity * mode_count / thermal_weight;
  return RegimeLabel{ratio > 1.0 ? Regime::Good : Regime::Bad, ratio};
}

TrialOutcomeModel conditional_probs(const ScenarioParams& params, Kind kind) {
  params.validate();
  const double eta = params.reflectivity;
  const double noise = kind == Kind::Unentangled
                           ? params.thermal_weight
                           : params.thermal_weight / params.mode_count;
  return TrialOutcomeModel{noise, noise * (1.0 - eta) + eta, kind};
}

ChernoffResult classical_chernoff_bernoulli(const TrialOutcomeModel& model) {
  const double p0 = model.p_yes_given_absent;
  const double p1 = model.p_yes_given_present;
  if (!(p0 >= 0.0 && p0 <= 1.0 && p1 >= 0.0 && p1 <= 1.0)) {
    throw DomainError("outcome probabilities must lie in [0,1]");
  }
  const auto powz = [](double x, double e) {
    return x <= 0.0 ? 0.0 : std::pow(x, e);
  };
  const auto value = [&](double s) {
    return powz(p0, 1.0 - s) * powz(p1, s) +
           powz(1.0 - p0, 1.0 - s) * powz(1.0 - p1, s);
  };
  const MinimizeResult best = minimize_grid_golden(value, 0.0, 1.0);
  return ChernoffResult{best.value, best.x, -std::log(best.value)};
}

long long trials_needed(double q, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw DomainError("target error must lie in (0, 0.5)");
  }
  if (!(q > 0.0 && q < 1.0)) {
    throw DomainError("per-shot bound q = " + std::to_string(q) +
                      " gives no finite trial count (needs q in (0,1))");
  }
  const double n = std::ceil(std::log(2.0 * epsilon) / std::log(q));
  return n < 1.0 ? 1 : static_cast<long long>(n);
}

}  // namespace qillum
