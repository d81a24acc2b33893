// SPDX-License-Identifier: Apache-2.0
#include "qillum/stats.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qillum/errors.hpp"

namespace qillum {

namespace {

void check_binomial(int n, double p) {
  if (n < 1) throw DomainError("binomial needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("binomial probability must lie in [0,1], got " +
                      std::to_string(p));
  }
}

}  // namespace

double binomial_pmf(int n, double p, int k) {
  check_binomial(n, p);
  if (k < 0 || k > n) return 0.0;
  if (p == 0.0) return k == 0 ? 1.0 : 0.0;
  if (p == 1.0) return k == n ? 1.0 : 0.0;
  const double log_choose = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                            std::lgamma(n - k + 1.0);
  return std::exp(log_choose + k * std::log(p) + (n - k) * std::log1p(-p));
}

double binomial_tail_greater(int n, double p, int k) {
  check_binomial(n, p);
  if (k < 0) return 1.0;
  if (k >= n) return 0.0;
  double tail = 0.0;
  for (int j = n; j > k; --j) tail += binomial_pmf(n, p, j);
  return tail > 1.0 ? 1.0 : tail;
}

int smallest_count_cutoff(int n, double p, double budget) {
  check_binomial(n, p);
  if (!(budget > 0.0)) throw DomainError("false-alarm budget must be positive");
  // Suffix sums of the pmf give every tail in one pass.
  std::vector<double> tail_from(static_cast<std::size_t>(n) + 2, 0.0);
  for (int j = n; j >= 0; --j) {
    tail_from[j] = tail_from[j + 1] + binomial_pmf(n, p, j);
  }
  for (int k = 0; k <= n; ++k) {
    if (tail_from[k + 1] <= budget) return k;
  }
  return n;
}

}  // namespace qillum
