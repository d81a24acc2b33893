// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "qillum/discrimination.hpp"

namespace qillum {

/// Counter-based generator: each (seed, stream) pair is an independent
/// deterministic sequence, so replicas and pixels can run in parallel
/// without coordination.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  /// Uniform double in [0, 1).
  double next_unit();
  bool bernoulli(double p);

 private:
  std::uint64_t state_;
};

enum class Truth { Absent, Present };
enum class Decision { Absent, Present, Undecided };

const char* to_string(Truth truth);
const char* to_string(Decision decision);

struct TrialConfig {
  std::uint64_t seed = 0;
  double alpha = 0.01;  // target false-alarm probability
  double beta = 0.01;   // target miss probability
  int max_shots = 1000000;
  int replicas = 1;

  void validate() const;
};

struct TrialResult {
  Decision decision = Decision::Undecided;
  int shots_used = 0;
  int yes_count = 0;
};

struct CampaignSummary {
  double mean_shots = 0.0;
  double ci95_halfwidth = 0.0;
  double error_rate = 0.0;  // NaN when every replica was Undecided
  int replicas = 0;
  int undecided = 0;
};

enum class StopRule { Sequential, FirstPhoton };

const char* to_string(StopRule rule);

/// Wald sequential test on i.i.d. shots drawn under `truth`; log-likelihood
/// thresholds ln((1-beta)/alpha) and ln(beta/(1-alpha)); Undecided only when
/// max_shots runs out. Throws DomainError when p_yes_given_absent is 0 or 1
/// (use the first-photon rule there).
TrialResult run_sprt(const TrialOutcomeModel& model, Truth truth,
                     const TrialConfig& config, RngStream& rng);
TrialResult run_sprt(const TrialOutcomeModel& model, Truth truth,
                     const TrialConfig& config);

/// Send shots until the first yes or the horizon
/// h = ceil(sqrt(1/(p_yes_present * p_yes_absent))) (capped at max_shots);
/// decide Present iff a yes arrived within the horizon.
TrialResult run_first_photon(const TrialOutcomeModel& model, Truth truth,
                             const TrialConfig& config, RngStream& rng);
TrialResult run_first_photon(const TrialOutcomeModel& model, Truth truth,
                             const TrialConfig& config);

/// Run config.replicas independent trials, replica r on stream
/// (config.seed, r), aggregated in replica order regardless of the number
/// of worker threads. Undecided counts as a decision error.
CampaignSummary campaign(const TrialOutcomeModel& model, Truth truth,
                         const TrialConfig& config, StopRule rule);

}  // namespace qillum
