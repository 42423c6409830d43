// Copyright (c) 2026 qcut developers
// SPDX-License-Identifier: Apache-2.0

#ifndef QCUT_LINALG_HPP
#define QCUT_LINALG_HPP

#include "qcut/types.hpp"

namespace qcut {

struct EigSystem {
  RVector eigenvalues;   // ascending
  CMatrix eigenvectors;  // orthonormal columns, matching order
};

// Eigendecomposition of a Hermitian matrix. Rejects inputs whose
// hermiticity defect exceeds `tolerance`, reporting the max asymmetry.
EigSystem eig_hermitian(const CMatrix& m, double tolerance = tol::hermitian);

// Principal-branch Hermitian generator of a unitary: u = exp(i H), with
// every unitary eigenphase mapped into (-pi, pi].
CMatrix matrix_log_unitary(const CMatrix& u, double tolerance = tol::unitary);

// exp(i H) for Hermitian H, via eigendecomposition.
CMatrix exp_i_hermitian(const CMatrix& h);

// Nearest PSD matrix in Frobenius norm (eigenvalue clipping at zero).
CMatrix psd_clip(const CMatrix& m);

// Trace-preserving eigenvalue repair: clamp negative eigenvalues to zero
// and subtract the clamped mass equally from the remaining positive
// eigenvalues, iterating until none are negative. Exposed for direct
// testing; used by the linear-inversion fitter.
RVector clamp_spectrum_trace_preserving(const RVector& eigenvalues);

}  // namespace qcut

#endif
