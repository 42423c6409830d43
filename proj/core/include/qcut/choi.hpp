// Copyright (c) 2026 qcut developers
// SPDX-License-Identifier: Apache-2.0

#ifndef QCUT_CHOI_HPP
#define QCUT_CHOI_HPP

#include <vector>

#include "qcut/types.hpp"

namespace qcut {

// Channel representation conventions, fixed globally:
//
//   * vectorization is column-stacking, <<A|B>> = Tr[A^dagger B];
//   * the Choi matrix lives on (input x output) with the input as the
//     major factor:  L = sum_ij |i><j| (x) E(|i><j|),
//     so E(rho) = Tr_in[(rho^T (x) I) L] and Tr[L] = 2^n for TP channels;
//   * canonical Kraus operators K_i are the unvectorized weighted
//     eigenvectors of L, ordered so <<K_i|K_i>> is non-increasing.
//
// A ChoiTensor also represents the unnormalized conditional components of
// cut fragments: a state (no inputs), a POVM-like tensor (no outputs,
// stored as the transpose of the POVM element so that all contractions
// share one convention), or a conditional channel block.

enum class ChoiKind { State, Channel, PovmElement };

struct ChoiTensor {
  int num_in_qubits = 0;
  int num_out_qubits = 0;
  ChoiKind kind = ChoiKind::Channel;
  CMatrix matrix;  // dimension 2^(in+out), Hermitian

  Eigen::Index dim_in() const { return Eigen::Index(1) << num_in_qubits; }
  Eigen::Index dim_out() const { return Eigen::Index(1) << num_out_qubits; }
  Eigen::Index dim() const { return dim_in() * dim_out(); }

  // Validation helpers; throw on violation.
  void check_shape() const;
  void check_hermitian(double tolerance = tol::hermitian) const;
  void check_psd(double tolerance = tol::psd) const;
  // Tr_out[L] = I_in within tolerance (trace preservation).
  void check_trace_preserving(double tolerance = tol::tp) const;
};

ChoiTensor make_state_tensor(const CMatrix& rho);
ChoiTensor make_channel_tensor(int in_qubits, int out_qubits, const CMatrix& m);

// Choi matrix of the unitary channel rho -> u rho u^dagger.
ChoiTensor choi_of_unitary(const CMatrix& u);

// Conversions. kraus_to_choi accepts non-trace-preserving sets as long as
// sum K^dagger K <= I + tol; choi_to_kraus rejects Choi matrices with an
// eigenvalue below -tol::psd.
ChoiTensor kraus_to_choi(const std::vector<CMatrix>& kraus, int in_qubits, int out_qubits);
std::vector<CMatrix> choi_to_kraus(const ChoiTensor& choi, double cutoff = 1e-12);

// E(rho) via the Choi matrix: Tr_in[(rho^T (x) I) L].
CMatrix apply_choi(const ChoiTensor& choi, const CMatrix& rho);
// E(rho) via a Kraus set.
CMatrix apply_kraus(const std::vector<CMatrix>& kraus, const CMatrix& rho);

// CPTP check: PSD within tol::psd and Tr_out[L] = I within tol::tp.
bool is_cptp(const ChoiTensor& choi, double psd_tol = tol::psd, double tp_tol = tol::tp);

// Pauli transfer matrix diagonal entry R_PP = Tr[P E(P)] / 2^n for the
// n-qubit Pauli with base-4 label `pauli_index` (digit q = Pauli on
// qubit q; 0..3 = I,X,Y,Z).
double ptm_diagonal_entry(const ChoiTensor& choi, int pauli_index);

// Full n-qubit Pauli string matrix for a base-4 label.
CMatrix pauli_string_matrix(int num_qubits, int pauli_index);

}  // namespace qcut

#endif
