// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qillum/imaging.hpp"
#include "qillum/montecarlo.hpp"

namespace qillum {

/// One sweep cell: everything the discrimination layer knows about a
/// (reflectivity, noise, mode count, kind) point. Cells with d*b >= 0.5 lie
/// outside the state-construction domain: the matrix-based fields
/// (q_numeric, s_star, helstrom_error) are NaN there and trials_eps01
/// falls back to the analytic bound.
struct SweepRow {
  double eta = 0.0;
  double b = 0.0;
  int d = 1;
  Kind kind = Kind::Unentangled;
  RegimeLabel regime;
  double q_numeric = 1.0;
  double s_star = 0.0;
  double q_analytic = 1.0;
  double q_regime_approx = 1.0;
  double helstrom_error = 0.5;
  long long trials_eps01 = -1;  // -1 sentinel when the bound reaches 1
};

/// Evaluate the Cartesian grid in input order; cells may run on worker
/// threads but the row order is fixed by the grid. Unentangled cells use
/// the uniform signal state.
std::vector<SweepRow> run_sweep(const std::vector<double>& etas,
                                const std::vector<double>& bs,
                                const std::vector<int>& ds,
                                const std::vector<Kind>& kinds,
                                double prior_absent = 0.5,
                                int dimension_cap = kDefaultDimensionCap);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_sweep_json(std::ostream& out, const std::vector<SweepRow>& rows);

/// One Monte Carlo campaign line.
struct CampaignRow {
  Kind kind = Kind::Unentangled;
  Truth truth = Truth::Present;
  double eta = 0.0;
  double b = 0.0;
  int d = 1;
  double alpha = 0.01;
  double beta = 0.01;
  CampaignSummary summary;
  std::uint64_t seed = 0;
};

void write_campaign_csv(std::ostream& out, const std::vector<CampaignRow>& rows);
void write_campaign_json(std::ostream& out, const std::vector<CampaignRow>& rows);

void write_comparison_csv(std::ostream& out, const ModeComparison& cmp);
void write_comparison_json(std::ostream& out, const ModeComparison& cmp);

}  // namespace qillum
