// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qillum/imaging.hpp"

namespace qillum {

/// Decimal form at 17 significant digits; parses back to the identical
/// double.
std::string fmt17(double value);

/// Plain-text matrix fixture: first line `dim d`, then d*d lines
/// `row col re im` at 17 significant digits.
void write_matrix_dump(std::ostream& out, const Eigen::MatrixXcd& m);
Eigen::MatrixXcd read_matrix_dump(std::istream& in);

/// Grid format: first line `width height`, then height lines of width
/// space-separated reals.
void write_grid(std::ostream& out, int width, int height,
                const std::vector<double>& values);
ReflectivityMap read_map(std::istream& in);

/// Detected-pixel export as PGM (P2, 255 levels).
void write_pgm(std::ostream& out, const ImageResult& result);

/// Parsed scenario config file; every field optional so flags can override.
struct ScenarioFile {
  std::optional<double> eta;
  std::optional<double> b;
  std::optional<int> d;
  std::optional<double> prior0;
  std::optional<std::uint64_t> seed;
  bool psi_uniform = false;
  std::optional<std::vector<std::complex<double>>> psi;
};

/// Line-oriented `key = value`; keys eta, b, d, prior0, psi, seed; psi is
/// either `uniform` or a comma-separated `re:im` list. Blank lines and
/// lines starting with `#` are skipped; any other key throws ConfigError
/// naming it.
ScenarioFile parse_scenario_file(std::istream& in);

}  // namespace qillum
