// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "qillum/discrimination.hpp"

namespace qillum {

/// Per-pixel false-alarm budget used when compare_modes matches thresholds
/// across modes.
inline constexpr double kFalseAlarmBudget = 1e-3;

/// Grid of per-pixel reflectivities, row-major.
struct ReflectivityMap {
  int width = 0;
  int height = 0;
  std::vector<double> values;

  double at(int x, int y) const { return values[static_cast<std::size_t>(y) * width + x]; }

  /// Throws DomainError on empty dimensions, size mismatch, or entries
  /// outside [0,1].
  void validate() const;

  static ReflectivityMap checkerboard(int width, int height, double low, double high);
};

struct ImagingConfig {
  int shots_per_pixel = 1;
  Kind kind = Kind::Unentangled;
  double thermal_weight = 0.0;
  int mode_count = 1;
  double threshold = 0.5;  // yes-fraction cut
  std::uint64_t seed = 0;

  void validate() const;
};

struct ImageResult {
  int width = 0;
  int height = 0;
  std::vector<unsigned char> detected;  // 0/1, row-major
  std::vector<double> yes_fraction;
  double pixel_error_rate = 0.0;  // vs ground truth reflectivity > 0
  /// Row-major indices of nonzero-reflectivity pixels whose threshold does
  /// not separate the absent and present yes-probabilities.
  std::vector<int> threshold_warnings;
};

/// Fixed-budget detection per pixel: shots_per_pixel Bernoulli draws from
/// that pixel's outcome model on stream (seed, pixel index), detected iff
/// the yes fraction exceeds the threshold. Pixel order never changes the
/// result.
ImageResult scan_image(const ReflectivityMap& map, const ImagingConfig& config);

/// Paired scan report: unentangled at the full budget versus entangled at a
/// budget divided by the mode count, each thresholded at the same per-pixel
/// false-alarm budget.
struct ModeComparison {
  double unentangled_error_rate = 0.0;
  double entangled_error_rate = 0.0;
  double difference = 0.0;        // unentangled - entangled
  double sigma_difference = 0.0;  // one binomial standard deviation of the difference
  int shots_unentangled = 0;
  int shots_entangled = 0;
  double threshold_unentangled = 0.0;
  double threshold_entangled = 0.0;
};

/// Runs scan_image unentangled with shots_unentangled shots and entangled
/// with ceil(shots_unentangled / mode_count) shots; thresholds are matched
/// at kFalseAlarmBudget through the binomial tail of each absent model.
ModeComparison compare_modes(const ReflectivityMap& map, double thermal_weight,
                             int mode_count, int shots_unentangled,
                             std::uint64_t seed);

}  // namespace qillum
