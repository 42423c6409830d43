// Copyright (c) 2026 qcut developers
// SPDX-License-Identifier: Apache-2.0

#ifndef QCUT_TYPES_HPP
#define QCUT_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qcut {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// Default numerical tolerances used across the library. Chosen so that
// shot-noise-level fitting artifacts do not trip representation checks.
namespace tol {
inline constexpr double hermitian = 1e-10;
inline constexpr double hermitian_strict = 1e-12;
inline constexpr double psd = 1e-8;
inline constexpr double tp = 1e-8;
inline constexpr double unitary = 1e-10;
}  // namespace tol

//------------------------------------------------------------------------
// Elementary matrix helpers
//------------------------------------------------------------------------

bool is_finite(const CMatrix& m);

// Largest elementwise deviation |m - m^dagger|.
double hermiticity_defect(const CMatrix& m);

inline bool is_hermitian(const CMatrix& m, double tolerance = tol::hermitian) {
  return m.rows() == m.cols() && hermiticity_defect(m) <= tolerance;
}

double unitarity_defect(const CMatrix& m);

inline bool is_unitary(const CMatrix& m, double tolerance = tol::unitary) {
  return m.rows() == m.cols() && unitarity_defect(m) <= tolerance;
}

CMatrix kron(const CMatrix& a, const CMatrix& b);

// Column-stacking vectorization: |A>> concatenates the columns of A, so
// <<A|B>> = Tr[A^dagger B].  devectorize(vectorize(A), rows, cols) == A.
CVector vectorize(const CMatrix& a);
CMatrix devectorize(const CVector& v, Eigen::Index rows, Eigen::Index cols);

// Hilbert-Schmidt inner product <<A|B>> = Tr[A^dagger B].
cplx hs_inner(const CMatrix& a, const CMatrix& b);

// Partial trace over the major (left) or minor (right) tensor factor of a
// square matrix on a bipartite space dim = d_major * d_minor.
CMatrix partial_trace_major(const CMatrix& m, Eigen::Index d_major, Eigen::Index d_minor);
CMatrix partial_trace_minor(const CMatrix& m, Eigen::Index d_major, Eigen::Index d_minor);

//------------------------------------------------------------------------
// Constant single-qubit matrices
//------------------------------------------------------------------------

const CMatrix& pauli_i();
const CMatrix& pauli_x();
const CMatrix& pauli_y();
const CMatrix& pauli_z();
// Pauli by index 0..3 = I, X, Y, Z.
const CMatrix& pauli(int idx);

const CMatrix& hadamard();
const CMatrix& s_gate();
const CMatrix& cnot();

// Projector |b><b| on one qubit, b in {0,1}.
const CMatrix& ketbra(int b);

}  // namespace qcut

#endif
