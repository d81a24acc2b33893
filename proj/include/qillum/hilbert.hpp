// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "qillum/basis.hpp"
#include "qillum/errors.hpp"

namespace qillum {

// Numerical contract constants shared across the library.
inline constexpr double kHermitianTol = 1e-12;   // max |A - A†| entry
inline constexpr double kTraceTol = 1e-10;       // |tr rho - 1|
inline constexpr double kPsdClipTol = 1e-10;     // eigenvalues in [-tol, tol] count as 0
inline constexpr double kPositivePartTol = 1e-12;  // strict cutoff for the yes-projector
inline constexpr int kDefaultDimensionCap = 4160;  // d(d+1) at d = 64

/// Hermitian operator on a labeled finite basis.
class HermitianOperator {
 public:
  /// Validates squareness, basis length and Hermiticity (kHermitianTol).
  HermitianOperator(Eigen::MatrixXcd entries, Basis basis);

  static HermitianOperator identity(Basis basis);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  const Basis& basis() const { return basis_; }

 private:
  Eigen::MatrixXcd entries_;
  Basis basis_;
};

/// Unit-trace, positive-semidefinite (up to kPsdClipTol) Hermitian operator.
class DensityMatrix {
 public:
  /// Validates trace within kTraceTol and min eigenvalue >= -kPsdClipTol.
  explicit DensityMatrix(HermitianOperator op);

  int dim() const { return op_.dim(); }
  const HermitianOperator& op() const { return op_; }
  const Eigen::MatrixXcd& entries() const { return op_.entries(); }
  const Basis& basis() const { return op_.basis(); }

 private:
  HermitianOperator op_;
};

/// Real spectrum in descending order with aligned eigenvector columns.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
};

/// Kronecker product; the result basis is JointProduct labels with the
/// left operand index major.
HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b);

/// Dense Hermitian eigendecomposition, eigenvalues descending.
/// Throws NumericalError if the solver fails to converge.
Spectrum eig_hermitian(const HermitianOperator& h);

/// rho^s for s in [0,1] with the convention 0^s := 0 for every s, so s = 0
/// yields the projector onto the support of rho. Eigenvalues within
/// kPsdClipTol of zero are treated as exactly zero.
HermitianOperator dm_power(const DensityMatrix& rho, double s);

/// Trace norm ||a - b||_1 = sum |eigenvalues(a - b)|. Unhalved.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Projector onto the span of eigenvectors with eigenvalue > kPositivePartTol.
HermitianOperator positive_part_projector(const HermitianOperator& delta);

/// Re tr(a b) for Hermitian a, b (the product trace is real up to roundoff).
double real_trace_product(const HermitianOperator& a, const HermitianOperator& b);

}  // namespace qillum
