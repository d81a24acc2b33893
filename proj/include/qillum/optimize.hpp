// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

namespace qillum {

struct MinimizeResult {
  double x = 0.0;
  double value = 0.0;
};

/// Minimize f over [lo, hi]: coarse uniform grid, then golden-section
/// refinement of the best bracket until the bracket width drops below x_tol.
/// Returns the best evaluation seen anywhere, so the result never exceeds
/// any grid sample.
MinimizeResult minimize_grid_golden(const std::function<double(double)>& f,
                                    double lo, double hi,
                                    int grid_points = 65, double x_tol = 1e-8);

}  // namespace qillum
