// Copyright (c) 2026 qcut developers
// SPDX-License-Identifier: Apache-2.0

#ifndef QCUT_TOMO_HPP
#define QCUT_TOMO_HPP

#include <vector>

#include "qcut/cut.hpp"
#include "qcut/noise.hpp"

namespace qcut {

// Process-tomography basis for a fragment with k_in cut inputs and k_out
// cut outputs. An element for (prep tuple i, basis tuple b, outcome tuple
// o) is (x)_in prep(i_w)^T (x) (x)_out M(b_w, o_w): transposed preparations
// on input wires, POVM projectors on output wires, so that
// p(i,(b,o) | s) = <<B | T(s)>> for the conditional tensor T(s).
//
// The noisy variant premixes each output-wire projector by the assignment
// matrix: M~(b,o) = sum_o' A[o,o'] M(b,o').
class TomoBasis {
 public:
  TomoBasis(int k_in, int k_out);
  TomoBasis(int k_in, int k_out, const AssignmentMatrix& cut_assignment);

  int k_in() const { return k_in_; }
  int k_out() const { return k_out_; }
  int num_preps() const;     // 4^k_in
  int num_bases() const;     // 3^k_out
  int num_outcomes() const;  // 2^k_out
  int num_settings() const { return num_preps() * num_bases(); }
  int num_elements() const { return num_settings() * num_outcomes(); }

  // prep/basis/outcome are flat base-4/base-3/base-2 tuples, wire 0 least
  // significant (wire order = fragment's cut_inputs / cut_outputs order).
  CMatrix element(int prep, int basis, int outcome) const;

  Eigen::Index dim() const { return Eigen::Index(1) << (k_in_ + k_out_); }

 private:
  int k_in_;
  int k_out_;
  bool noisy_ = false;
  AssignmentMatrix assignment_ = AssignmentMatrix::Identity();
};

struct DualBasis {
  std::vector<CMatrix> duals;
  int rank = 0;
  double condition_number = 0.0;
};

// Duals |D_j>> = F^-1 |B_j>> of a spanning set, F = sum |B_i>><<B_i|.
// Rejects rank-deficient frames (naming rank and dimension) unless
// `allow_deficient`, in which case a pseudo-inverse is used and the duals
// reconstruct only the frame's range (partial-data linear inversion).
DualBasis dual_basis(const std::vector<CMatrix>& elements, bool allow_deficient = false,
                     double max_condition = 1e12);

// True conditional fragment tensors under a noise model, computed from the
// fragment's process action directly (linearity over input basis
// operators): T(s) = sum_ij |i><j| (x) E_s(|i><j|), where E_s is the
// unnormalized conditional map onto the cut outputs given conditioning
// outcome s. Readout error is not included (it acts on measurement, not on
// the tensor). The production data path estimates these same tensors from
// per-setting simulation; tests cross-check the two routes.
std::vector<ChoiTensor> exact_conditional_tensors(const Fragment& fragment,
                                                  const NoiseSpec& noise);

}  // namespace qcut

#endif
