// SPDX-License-Identifier: Apache-2.0
#include "qillum/hilbert.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace qillum {

std::string BasisLabel::to_string() const {
  switch (kind) {
    case Kind::SignalVacuum:
      return "vac";
    case Kind::SignalMode:
      return "S" + std::to_string(mode);
    case Kind::AncillaMode:
      return "A" + std::to_string(mode);
    case Kind::JointProduct:
      return parts.at(0).to_string() + "*" + parts.at(1).to_string();
    case Kind::FockTuple: {
      std::ostringstream os;
      os << "n(";
      for (std::size_t i = 0; i < occupations.size(); ++i) {
        if (i) os << ",";
        os << occupations[i];
      }
      os << ")";
      return os.str();
    }
  }
  return "?";
}

Basis signal_basis(int mode_count) {
  Basis basis;
  basis.reserve(static_cast<std::size_t>(mode_count) + 1);
  basis.push_back(BasisLabel::signal_vacuum());
  for (int k = 1; k <= mode_count; ++k) basis.push_back(BasisLabel::signal_mode(k));
  return basis;
}

Basis ancilla_basis(int mode_count) {
  Basis basis;
  basis.reserve(static_cast<std::size_t>(mode_count));
  for (int k = 1; k <= mode_count; ++k) basis.push_back(BasisLabel::ancilla_mode(k));
  return basis;
}

HermitianOperator::HermitianOperator(Eigen::MatrixXcd entries, Basis basis)
    : entries_(std::move(entries)), basis_(std::move(basis)) {
  if (entries_.rows() != entries_.cols()) {
    throw StructuralError("operator matrix must be square, got " +
                          std::to_string(entries_.rows()) + "x" +
                          std::to_string(entries_.cols()));
  }
  if (static_cast<Eigen::Index>(basis_.size()) != entries_.rows()) {
    throw StructuralError("basis has " + std::to_string(basis_.size()) +
                          " labels but operator dimension is " +
                          std::to_string(entries_.rows()));
  }
  const double dev = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (dev > kHermitianTol) {
    throw StructuralError("matrix is not Hermitian: max |A - A'| = " +
                          std::to_string(dev));
  }
}

HermitianOperator HermitianOperator::identity(Basis basis) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  return HermitianOperator(Eigen::MatrixXcd::Identity(n, n), std::move(basis));
}

DensityMatrix::DensityMatrix(HermitianOperator op) : op_(std::move(op)) {
  const double tr = op_.entries().trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw NumericalError("density matrix trace " + std::to_string(tr) +
                         " deviates from 1 beyond tolerance");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(op_.entries(),
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigensolver failed while validating a density matrix of dimension " +
                         std::to_string(op_.dim()));
  }
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -kPsdClipTol) {
    throw NumericalError("density matrix has eigenvalue " + std::to_string(min_eig) +
                         " below the PSD clip tolerance");
  }
}

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b) {
  const int da = a.dim();
  const int db = b.dim();
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(da) * db,
                       static_cast<Eigen::Index>(da) * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      out.block(static_cast<Eigen::Index>(i) * db, static_cast<Eigen::Index>(j) * db,
                db, db) = a.entries()(i, j) * b.entries();

  Basis basis;
  basis.reserve(static_cast<std::size_t>(da) * db);
  for (const auto& la : a.basis())
    for (const auto& lb : b.basis()) basis.push_back(BasisLabel::joint(la, lb));
  return HermitianOperator(std::move(out), std::move(basis));
}

Spectrum eig_hermitian(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.entries());
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    os << "Hermitian eigensolver did not converge (dim " << h.dim()
       << ", max entry " << h.entries().cwiseAbs().maxCoeff() << ")";
    throw NumericalError(os.str());
  }
  // Eigen returns ascending order; flip to descending.
  const Eigen::Index n = h.entries().rows();
  Spectrum spec;
  spec.eigenvalues = solver.eigenvalues().reverse();
  spec.eigenvectors.resize(n, n);
  for (Eigen::Index c = 0; c < n; ++c)
    spec.eigenvectors.col(c) = solver.eigenvectors().col(n - 1 - c);
  return spec;
}

HermitianOperator dm_power(const DensityMatrix& rho, double s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw DomainError("dm_power exponent must lie in [0,1], got " + std::to_string(s));
  }
  Spectrum spec = eig_hermitian(rho.op());
  Eigen::VectorXd powered(spec.eigenvalues.size());
  for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i) {
    const double lambda = spec.eigenvalues(i);
    // 0^s := 0 for all s, including s = 0, so s = 0 gives the support projector.
    powered(i) = lambda <= kPsdClipTol ? 0.0 : std::pow(lambda, s);
  }
  Eigen::MatrixXcd out = spec.eigenvectors * powered.asDiagonal() *
                         spec.eigenvectors.adjoint();
  // Symmetrize away roundoff so downstream constructors accept the result.
  out = 0.5 * (out + out.adjoint()).eval();
  return HermitianOperator(std::move(out), rho.basis());
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.basis() != b.basis()) {
    throw StructuralError("trace_distance requires operands on the same basis");
  }
  HermitianOperator diff(a.entries() - b.entries(), a.basis());
  const Spectrum spec = eig_hermitian(diff);
  return spec.eigenvalues.cwiseAbs().sum();
}

HermitianOperator positive_part_projector(const HermitianOperator& delta) {
  const Spectrum spec = eig_hermitian(delta);
  Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(delta.dim(), delta.dim());
  for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i) {
    if (spec.eigenvalues(i) > kPositivePartTol) {
      proj += spec.eigenvectors.col(i) * spec.eigenvectors.col(i).adjoint();
    }
  }
  proj = 0.5 * (proj + proj.adjoint()).eval();
  return HermitianOperator(std::move(proj), delta.basis());
}

double real_trace_product(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.basis() != b.basis()) {
    throw StructuralError("trace product requires operands on the same basis");
  }
  // tr(AB) = sum_ij A_ij B_ji; avoid forming the full product.
  return a.entries().cwiseProduct(b.entries().transpose()).sum().real();
}

}  // namespace qillum
