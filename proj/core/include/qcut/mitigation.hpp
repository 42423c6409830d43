// Copyright (c) 2026 qcut developers
// SPDX-License-Identifier: Apache-2.0

#ifndef QCUT_MITIGATION_HPP
#define QCUT_MITIGATION_HPP

#include "qcut/choi.hpp"

namespace qcut {

// Dominant eigenvalue truncation of a PSD tensor.
struct DevtReport {
  ChoiTensor input;
  ChoiTensor truncated;        // rank 1, PSD, trace 2^k_in
  double dominant_eigenvalue = 0.0;
  double discarded_weight = 0.0;  // 1 - lambda0 / Tr
  // Distance of the dominant Kraus operator from a scaled unitary:
  // || K0^dagger K0 - (Tr[K0^dagger K0]/d) I ||_F. Nonzero means the
  // truncated channel is not trace-preserving.
  double tp_deviation = 0.0;
};

// Truncate to the dominant eigenvector, rescaled to trace 2^k_in. A
// degenerate top eigenvalue (gap < 1e-10) is broken deterministically by
// picking the lexicographically largest eigenvector after normalizing its
// first nonzero component to positive real.
DevtReport devt(const ChoiTensor& tensor);

// Truncation keeping the dominant eigenpair: lambda0 |v0>><<v0|. For
// unnormalized conditional fragment tensors this preserves the block
// weight to first order in the noise strength (the contamination inflates
// the trace but not the top eigenvalue), so reconstructions knit from
// these keep their relative conditional probabilities.
ChoiTensor devt_weighted(const ChoiTensor& tensor);

// Coherent mismatch c = 1 - |<psi1|psi>|^2, psi1 the dominant eigenvector
// of rho_noisy. (Phase-invariant squared form of the overlap deficit; the
// bare 1 - <psi1|psi> is phase-ambiguous.)
double coherent_mismatch(const CMatrix& rho_noisy, const CVector& psi);

// Mismatch bound for n-qubit, m-layer depolarizing accumulation:
// delta^2/4 with delta = (1-p)^(-n m) - 1.
double depol_mismatch_bound(int num_qubits, int layers, double p);

// Dominant eigenvalue of rho - E_pauli(rho) for a pure state
// alpha|0> + beta|1> under the biased Pauli channel with parameters
// (p, b):  lambda = 2 p sqrt(1 + (4b + b^2) |alpha|^2 |beta|^2).
double biased_dominant_eigenvalue(double p, double bias, cplx alpha, cplx beta);

// Error probability threshold p > -b/4 associated with a negative Pauli
// bias; rejects b >= 0.
double pta_bias_threshold(double bias);

}  // namespace qcut

#endif
