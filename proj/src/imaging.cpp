// SPDX-License-Identifier: Apache-2.0
#include "qillum/imaging.hpp"

#include <cmath>
#include <string>

#include "internal/parallel.hpp"
#include "qillum/montecarlo.hpp"
#include "qillum/stats.hpp"

namespace qillum {

void ReflectivityMap::validate() const {
  if (width < 1 || height < 1) {
    throw DomainError("map needs positive width and height");
  }
  if (values.size() != static_cast<std::size_t>(width) * height) {
    throw DomainError("map holds " + std::to_string(values.size()) +
                      " values for a " + std::to_string(width) + "x" +
                      std::to_string(height) + " grid");
  }
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw DomainError("map reflectivity " + std::to_string(v) +
                        " outside [0,1]");
    }
  }
}

ReflectivityMap ReflectivityMap::checkerboard(int width, int height, double low,
                                              double high) {
  ReflectivityMap map{width, height, {}};
  map.values.resize(static_cast<std::size_t>(width) * height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      map.values[static_cast<std::size_t>(y) * width + x] =
          ((x + y) % 2 == 0) ? low : high;
    }
  }
  map.validate();
  return map;
}

void ImagingConfig::validate() const {
  if (shots_per_pixel < 1) throw DomainError("shots_per_pixel must be at least 1");
  if (mode_count < 1) throw DomainError("mode count must be at least 1");
  if (!(thermal_weight >= 0.0)) {
    throw DomainError("thermal weight must be nonnegative");
  }
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw DomainError("threshold must lie strictly inside (0,1)");
  }
}

ImageResult scan_image(const ReflectivityMap& map, const ImagingConfig& config) {
  map.validate();
  config.validate();

  const long long pixels = static_cast<long long>(map.width) * map.height;
  ImageResult result;
  result.width = map.width;
  result.height = map.height;
  result.detected.assign(static_cast<std::size_t>(pixels), 0);
  result.yes_fraction.assign(static_cast<std::size_t>(pixels), 0.0);

  std::vector<unsigned char> wrong(static_cast<std::size_t>(pixels), 0);
  std::vector<unsigned char> warned(static_cast<std::size_t>(pixels), 0);

  internal::parallel_for(pixels, [&](long long idx) {
    const std::size_t i = static_cast<std::size_t>(idx);
    const double eta = map.values[i];
    ScenarioParams params;
    params.reflectivity = eta;
    params.thermal_weight = config.thermal_weight;
    params.mode_count = config.mode_count;
    const TrialOutcomeModel model = conditional_probs(params, config.kind);

    if (eta > 0.0 && !(model.p_yes_given_absent < config.threshold &&
                       config.threshold < model.p_yes_given_present)) {
      warned[i] = 1;
    }

    RngStream rng(config.seed, static_cast<std::uint64_t>(idx));
    int yes = 0;
    for (int shot = 0; shot < config.shots_per_pixel; ++shot) {
      yes += rng.bernoulli(model.p_yes_given_present) ? 1 : 0;
    }
    const double fraction =
        static_cast<double>(yes) / config.shots_per_pixel;
    result.yes_fraction[i] = fraction;
    const bool detected = fraction > config.threshold;
    result.detected[i] = detected ? 1 : 0;
    if (detected != (eta > 0.0)) wrong[i] = 1;
  });

  long long errors = 0;
  for (long long i = 0; i < pixels; ++i) {
    errors += wrong[static_cast<std::size_t>(i)];
    if (warned[static_cast<std::size_t>(i)]) {
      result.threshold_warnings.push_back(static_cast<int>(i));
    }
  }
  result.pixel_error_rate = static_cast<double>(errors) / pixels;
  return result;
}

ModeComparison compare_modes(const ReflectivityMap& map, double thermal_weight,
                             int mode_count, int shots_unentangled,
                             std::uint64_t seed) {
  map.validate();
  if (mode_count < 1) throw DomainError("mode count must be at least 1");
  if (shots_unentangled < mode_count) {
    throw DomainError("comparison needs at least mode_count shots, got " +
                      std::to_string(shots_unentangled));
  }
  const int shots_entangled =
      (shots_unentangled + mode_count - 1) / mode_count;

  const auto matched_threshold = [](int shots, double p_absent) {
    const double p = p_absent > 0.0 ? p_absent : 0.0;
    const int cutoff = smallest_count_cutoff(shots, p, kFalseAlarmBudget);
    return (cutoff + 0.5) / shots;
  };
  const double threshold_unent =
      matched_threshold(shots_unentangled, thermal_weight);
  const double threshold_ent =
      matched_threshold(shots_entangled, thermal_weight / mode_count);

  ImagingConfig unent;
  unent.shots_per_pixel = shots_unentangled;
  unent.kind = Kind::Unentangled;
  unent.thermal_weight = thermal_weight;
  unent.mode_count = mode_count;
  unent.threshold = threshold_unent;
  unent.seed = seed;

  ImagingConfig ent = unent;
  ent.shots_per_pixel = shots_entangled;
  ent.kind = Kind::Entangled;
  ent.threshold = threshold_ent;
  ent.seed = seed + 1;

  const ImageResult run_unent = scan_image(map, unent);
  const ImageResult run_ent = scan_image(map, ent);

  const double pixels = static_cast<double>(map.width) * map.height;
  const double ru = run_unent.pixel_error_rate;
  const double re = run_ent.pixel_error_rate;
  const double sigma =
      std::sqrt(ru * (1.0 - ru) / pixels + re * (1.0 - re) / pixels);

  return ModeComparison{ru,
                        re,
                        ru - re,
                        sigma,
                        shots_unentangled,
                        shots_entangled,
                        threshold_unent,
                        threshold_ent};
}

}  // namespace qillum
