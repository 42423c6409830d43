// Copyright (c) 2026 qcut developers
// SPDX-License-Identifier: Apache-2.0

#include "qcut/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qcut {

EigSystem eig_hermitian(const CMatrix& m, double tolerance) {
  double defect = hermiticity_defect(m);
  if (!(defect <= tolerance)) {
    std::ostringstream msg;
    msg << "eig_hermitian: input is not Hermitian (max asymmetry " << defect << ")";
    throw std::invalid_argument(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver((m + m.adjoint()) / 2.0);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eig_hermitian: eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

CMatrix matrix_log_unitary(const CMatrix& u, double tolerance) {
  double defect = unitarity_defect(u);
  if (!(defect <= tolerance)) {
    std::ostringstream msg;
    msg << "matrix_log_unitary: input is not unitary (defect " << defect << ")";
    throw std::invalid_argument(msg.str());
  }
  // A unitary is normal, so its Schur form is diagonal up to rounding; the
  // Schur basis provides orthonormal eigenvectors even with degenerate
  // eigenphases, which keeps H exactly Hermitian.
  Eigen::ComplexSchur<CMatrix> schur(u);
  if (schur.info() != Eigen::Success)
    throw std::runtime_error("matrix_log_unitary: Schur decomposition failed");
  const CMatrix& q = schur.matrixU();
  RVector phases(u.rows());
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    cplx ev = schur.matrixT()(i, i);
    double theta = std::atan2(ev.imag(), ev.real());
    if (theta <= -std::numbers::pi + 1e-12) theta = std::numbers::pi;  // principal branch (-pi, pi]
    phases(i) = theta;
  }
  return q * phases.asDiagonal() * q.adjoint();
}

CMatrix exp_i_hermitian(const CMatrix& h) {
  EigSystem es = eig_hermitian(h);
  CVector phases(h.rows());
  for (Eigen::Index i = 0; i < h.rows(); ++i)
    phases(i) = std::exp(cplx(0.0, es.eigenvalues(i)));
  return es.eigenvectors * phases.asDiagonal() * es.eigenvectors.adjoint();
}

CMatrix psd_clip(const CMatrix& m) {
  EigSystem es = eig_hermitian((m + m.adjoint()) / 2.0, 1e300);
  RVector ev = es.eigenvalues.cwiseMax(0.0);
  return es.eigenvectors * ev.asDiagonal() * es.eigenvectors.adjoint();
}

RVector clamp_spectrum_trace_preserving(const RVector& eigenvalues) {
  RVector ev = eigenvalues;
  for (int pass = 0; pass < 2 * int(ev.size()) + 2; ++pass) {
    double negative_mass = 0.0;
    int positive_count = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      if (ev(i) < 0.0)
        negative_mass += ev(i);
      else if (ev(i) > 0.0)
        ++positive_count;
    }
    if (negative_mass == 0.0) break;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
      if (ev(i) < 0.0) ev(i) = 0.0;
    if (positive_count == 0) break;  // nothing left to carry the mass
    double shift = negative_mass / positive_count;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
      if (ev(i) > 0.0) ev(i) += shift;
  }
  return ev;
}

}  // namespace qcut
