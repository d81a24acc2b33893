// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace qillum {

/// Binomial(n, p) point mass at k, computed through log-gamma so large n
/// stays finite.
double binomial_pmf(int n, double p, int k);

/// P(X > k) for X ~ Binomial(n, p).
double binomial_tail_greater(int n, double p, int k);

/// Smallest k with P(X > k) <= budget; n when even excluding all counts
/// cannot meet the budget.
int smallest_count_cutoff(int n, double p, double budget);

}  // namespace qillum
