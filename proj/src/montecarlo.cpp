// SPDX-License-Identifier: Apache-2.0
#include "qillum/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "internal/parallel.hpp"

namespace qillum {

const char* to_string(Truth truth) {
  return truth == Truth::Present ? "present" : "absent";
}

const char* to_string(Decision decision) {
  switch (decision) {
    case Decision::Absent:
      return "absent";
    case Decision::Present:
      return "present";
    case Decision::Undecided:
      return "undecided";
  }
  return "?";
}

const char* to_string(StopRule rule) {
  return rule == StopRule::Sequential ? "sprt" : "first-photon";
}

namespace {

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

void check_model(const TrialOutcomeModel& model) {
  if (!(model.p_yes_given_absent >= 0.0 && model.p_yes_given_absent <= 1.0) ||
      !(model.p_yes_given_present >= 0.0 && model.p_yes_given_present <= 1.0)) {
    throw DomainError("outcome probabilities must lie in [0,1]");
  }
}

double truth_probability(const TrialOutcomeModel& model, Truth truth) {
  return truth == Truth::Present ? model.p_yes_given_present
                                 : model.p_yes_given_absent;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) {
  state_ = mix64(seed + kGolden);
  state_ = mix64(state_ + stream);
}

std::uint64_t RngStream::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double RngStream::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

bool RngStream::bernoulli(double p) { return next_unit() < p; }

void TrialConfig::validate() const {
  if (!(alpha > 0.0 && alpha < 0.5) || !(beta > 0.0 && beta < 0.5)) {
    throw DomainError("alpha and beta must lie in (0, 0.5)");
  }
  if (max_shots < 1) throw DomainError("max_shots must be at least 1");
  if (replicas < 1) throw DomainError("replicas must be at least 1");
}

TrialResult run_sprt(const TrialOutcomeModel& model, Truth truth,
                     const TrialConfig& config, RngStream& rng) {
  config.validate();
  check_model(model);
  const double p0 = model.p_yes_given_absent;
  const double p1 = model.p_yes_given_present;
  if (p0 <= 0.0 || p0 >= 1.0) {
    throw DomainError(
        "sequential test needs p_yes_given_absent strictly inside (0,1); "
        "use the first-photon rule for noiseless models");
  }

  const double upper = std::log((1.0 - config.beta) / config.alpha);
  const double lower = std::log(config.beta / (1.0 - config.alpha));
  const double inc_yes = std::log(p1) - std::log(p0);
  const double inc_no = std::log1p(-p1) - std::log1p(-p0);
  const double p_truth = truth_probability(model, truth);

  double llr = 0.0;
  int yes_count = 0;
  for (int shot = 1; shot <= config.max_shots; ++shot) {
    const bool yes = rng.bernoulli(p_truth);
    yes_count += yes ? 1 : 0;
    llr += yes ? inc_yes : inc_no;
    if (llr >= upper) return TrialResult{Decision::Present, shot, yes_count};
    if (llr <= lower) return TrialResult{Decision::Absent, shot, yes_count};
  }
  return TrialResult{Decision::Undecided, config.max_shots, yes_count};
}

TrialResult run_sprt(const TrialOutcomeModel& model, Truth truth,
                     const TrialConfig& config) {
  RngStream rng(config.seed, 0);
  return run_sprt(model, truth, config, rng);
}

TrialResult run_first_photon(const TrialOutcomeModel& model, Truth truth,
                             const TrialConfig& config, RngStream& rng) {
  config.validate();
  check_model(model);
  const double product =
      model.p_yes_given_present * model.p_yes_given_absent;
  int horizon = config.max_shots;
  if (product > 0.0) {
    const double h = std::ceil(std::sqrt(1.0 / product));
    if (h < static_cast<double>(config.max_shots)) horizon = static_cast<int>(h);
  }

  const double p_truth = truth_probability(model, truth);
  for (int shot = 1; shot <= horizon; ++shot) {
    if (rng.bernoulli(p_truth)) return TrialResult{Decision::Present, shot, 1};
  }
  return TrialResult{Decision::Absent, horizon, 0};
}

TrialResult run_first_photon(const TrialOutcomeModel& model, Truth truth,
                             const TrialConfig& config) {
  RngStream rng(config.seed, 0);
  return run_first_photon(model, truth, config, rng);
}

CampaignSummary campaign(const TrialOutcomeModel& model, Truth truth,
                         const TrialConfig& config, StopRule rule) {
  config.validate();
  check_model(model);
  if (config.replicas < 30) {
    throw DomainError("campaign needs at least 30 replicas for the interval");
  }
  if (rule == StopRule::Sequential &&
      (model.p_yes_given_absent <= 0.0 || model.p_yes_given_absent >= 1.0)) {
    throw DomainError(
        "sequential campaigns need p_yes_given_absent strictly inside (0,1); "
        "use the first-photon rule for noiseless models");
  }

  std::vector<TrialResult> results(static_cast<std::size_t>(config.replicas));
  internal::parallel_for(config.replicas, [&](long long r) {
    RngStream rng(config.seed, static_cast<std::uint64_t>(r));
    results[static_cast<std::size_t>(r)] =
        rule == StopRule::Sequential
            ? run_sprt(model, truth, config, rng)
            : run_first_photon(model, truth, config, rng);
  });

  // Fixed-order reduction keeps aggregates bitwise stable across thread
  // counts.
  double shots_sum = 0.0;
  int errors = 0;
  int undecided = 0;
  const Decision want =
      truth == Truth::Present ? Decision::Present : Decision::Absent;
  for (const TrialResult& r : results) {
    shots_sum += r.shots_used;
    if (r.decision == Decision::Undecided) ++undecided;
    if (r.decision != want) ++errors;
  }
  const double mean = shots_sum / config.replicas;

  double sq_sum = 0.0;
  for (const TrialResult& r : results) {
    const double dev = r.shots_used - mean;
    sq_sum += dev * dev;
  }
  const double sd = config.replicas > 1
                        ? std::sqrt(sq_sum / (config.replicas - 1))
                        : 0.0;
  constexpr double kZ95 = 1.959963984540054;
  const double ci = kZ95 * sd / std::sqrt(static_cast<double>(config.replicas));

  double error_rate = static_cast<double>(errors) / config.replicas;
  if (undecided == config.replicas) {
    error_rate = std::numeric_limits<double>::quiet_NaN();
  }
  return CampaignSummary{mean, ci, error_rate, config.replicas, undecided};
}

}  // namespace qillum
