// SPDX-License-Identifier: Apache-2.0
#include "qillum/optimize.hpp"

#include <cmath>

#include "qillum/errors.hpp"

namespace qillum {

MinimizeResult minimize_grid_golden(const std::function<double(double)>& f,
                                    double lo, double hi,
                                    int grid_points, double x_tol) {
  if (!(lo < hi) || grid_points < 3) {
    throw DomainError("minimizer needs lo < hi and at least 3 grid points");
  }

  MinimizeResult best{lo, f(lo)};
  auto consider = [&best](double x, double v) {
    if (v < best.value) best = {x, v};
  };

  const double step = (hi - lo) / (grid_points - 1);
  int best_idx = 0;
  double best_grid = best.value;
  for (int i = 1; i < grid_points; ++i) {
    const double x = (i == grid_points - 1) ? hi : lo + i * step;
    const double v = f(x);
    consider(x, v);
    if (v < best_grid) {
      best_grid = v;
      best_idx = i;
    }
  }

  double a = lo + (best_idx > 0 ? (best_idx - 1) * step : 0.0);
  double b = (best_idx < grid_points - 1) ? lo + (best_idx + 1) * step : hi;

  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  consider(x1, f1);
  consider(x2, f2);
  while (b - a > x_tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
      consider(x1, f1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
      consider(x2, f2);
    }
  }
  return best;
}

}  // namespace qillum
