// Copyright (c) 2026 qcut developers
// SPDX-License-Identifier: Apache-2.0

#include "qcut/types.hpp"

#include <cmath>
#include <stdexcept>

namespace qcut {

bool is_finite(const CMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

double hermiticity_defect(const CMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const CMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  CMatrix g = m.adjoint() * m;
  g -= CMatrix::Identity(m.rows(), m.cols());
  return g.cwiseAbs().maxCoeff();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CVector vectorize(const CMatrix& a) {
  return Eigen::Map<const CVector>(a.data(), a.size());
}

CMatrix devectorize(const CVector& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols) throw std::invalid_argument("devectorize: size mismatch");
  return Eigen::Map<const CMatrix>(v.data(), rows, cols);
}

cplx hs_inner(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("hs_inner: shape mismatch");
  return (a.adjoint() * b).trace();
}

CMatrix partial_trace_major(const CMatrix& m, Eigen::Index d_major, Eigen::Index d_minor) {
  if (m.rows() != d_major * d_minor || m.cols() != m.rows())
    throw std::invalid_argument("partial_trace_major: dimension mismatch");
  CMatrix out = CMatrix::Zero(d_minor, d_minor);
  for (Eigen::Index k = 0; k < d_major; ++k)
    out += m.block(k * d_minor, k * d_minor, d_minor, d_minor);
  return out;
}

CMatrix partial_trace_minor(const CMatrix& m, Eigen::Index d_major, Eigen::Index d_minor) {
  if (m.rows() != d_major * d_minor || m.cols() != m.rows())
    throw std::invalid_argument("partial_trace_minor: dimension mismatch");
  CMatrix out = CMatrix::Zero(d_major, d_major);
  for (Eigen::Index i = 0; i < d_major; ++i)
    for (Eigen::Index j = 0; j < d_major; ++j) {
      cplx t = 0.0;
      for (Eigen::Index k = 0; k < d_minor; ++k) t += m(i * d_minor + k, j * d_minor + k);
      out(i, j) = t;
    }
  return out;
}

namespace {
CMatrix make2(cplx a, cplx b, cplx c, cplx d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}
}  // namespace

const CMatrix& pauli_i() {
  static const CMatrix m = CMatrix::Identity(2, 2);
  return m;
}
const CMatrix& pauli_x() {
  static const CMatrix m = make2(0, 1, 1, 0);
  return m;
}
const CMatrix& pauli_y() {
  static const CMatrix m = make2(0, cplx(0, -1), cplx(0, 1), 0);
  return m;
}
const CMatrix& pauli_z() {
  static const CMatrix m = make2(1, 0, 0, -1);
  return m;
}

const CMatrix& pauli(int idx) {
  switch (idx) {
    case 0: return pauli_i();
    case 1: return pauli_x();
    case 2: return pauli_y();
    case 3: return pauli_z();
    default: throw std::invalid_argument("pauli: index out of range");
  }
}

const CMatrix& hadamard() {
  static const CMatrix m = make2(1, 1, 1, -1) / std::sqrt(2.0);
  return m;
}

const CMatrix& s_gate() {
  static const CMatrix m = make2(1, 0, 0, cplx(0, 1));
  return m;
}

const CMatrix& cnot() {
  static const CMatrix m = [] {
    CMatrix c = CMatrix::Identity(4, 4);
    // control = low bit (qubit order convention: qubits[0] is the low bit)
    c(1, 1) = 0;
    c(3, 3) = 0;
    c(1, 3) = 1;
    c(3, 1) = 1;
    return c;
  }();
  return m;
}

const CMatrix& ketbra(int b) {
  static const CMatrix p0 = make2(1, 0, 0, 0);
  static const CMatrix p1 = make2(0, 0, 0, 1);
  if (b == 0) return p0;
  if (b == 1) return p1;
  throw std::invalid_argument("ketbra: bit must be 0 or 1");
}

}  // namespace qcut
