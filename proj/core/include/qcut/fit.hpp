// Copyright (c) 2026 qcut developers
// SPDX-License-Identifier: Apache-2.0

#ifndef QCUT_FIT_HPP
#define QCUT_FIT_HPP

#include <vector>

#include "qcut/dataset.hpp"
#include "qcut/tomo.hpp"

namespace qcut {

enum class FitterKind { Lin, Cls, MemCls };

enum class ConstraintKind {
  PsdOnly,  // positivity only
  TpSum,    // sum_s Tr_out[T(s)] = I_in  (conditioning outcomes partition a TP channel)
};

enum class WeightScheme {
  Identity,
  Binomial,  // w = 1 / max(sigma_hat, 1/shots), sigma_hat = sqrt(p(1-p)/shots)
};

struct FitOptions {
  ConstraintKind constraint = ConstraintKind::TpSum;
  WeightScheme weights = WeightScheme::Identity;

  // Mix cut-output POVM elements by this assignment matrix in the fitter
  // basis (LIN noisy-dual variant and MEMCLS); MEMCLS additionally couples
  // conditioning blocks through it.
  AssignmentMatrix assignment = AssignmentMatrix::Identity();
  bool noisy_basis = false;

  // LIN post-processing: trace-preserving eigenvalue repair, then per-block
  // trace normalization to 2^k_in times the empirical conditioning weight.
  bool rescale = true;
  bool normalize_trace = true;

  int max_iterations = 5000;
  double tolerance = 1e-9;
  bool warm_start = true;  // CLS/MemCls start from the LIN estimate
};

struct FitDiagnostics {
  int iterations = 0;
  double residual = 0.0;                // final 0.5 ||W (model - data)||^2
  double min_eigenvalue_before = 0.0;   // most negative eigenvalue seen pre-projection
  bool converged = true;
  int frame_rank = 0;
  double frame_condition = 0.0;
  bool low_confidence = false;  // LIN on partial data (deficient frame)
};

struct FitResult {
  FitterKind fitter = FitterKind::Lin;
  int k_in = 0;
  int k_out = 0;
  std::vector<ChoiTensor> blocks;  // conditional tensors T(s), s = block index
  FitDiagnostics diagnostics;
};

// Linear inversion per conditioning block: T(s) = sum_I p_I,s D_I with the
// duals of the (possibly noisy) basis, then PSD eigenvalue repair and
// trace normalization. Partial data is permitted (pseudo-inverse duals)
// and flagged low-confidence.
FitResult fit_lin(const ConditionalDataset& data, const FitOptions& options = {});

// Constrained least squares over all blocks jointly:
//   minimize 1/2 || W (S |T>> - p) ||^2  subject to  T(s) >= 0 and the
// configured affine constraint. Accelerated projected gradient; projection
// onto the PSD/affine intersection by Dykstra alternation. Stops when the
// relative objective change falls below options.tolerance or at the
// iteration cap (diagnostics flag the latter).
FitResult fit_cls(const ConditionalDataset& data, const FitOptions& options = {});

// Measurement-error-mitigated CLS: the model couples blocks through the
// conditioning-bit confusion P(s|s') = prod_q A[s_q, s'_q] and uses
// A-mixed POVM elements on cut outputs. Requires an invertible assignment
// matrix. options.assignment supplies A.
FitResult fit_memcls(const ConditionalDataset& data, const FitOptions& options = {});

// Single-block convenience accessors (blocks are indexed by conditioning
// bits).
ChoiTensor fit_lin_block(const ConditionalDataset& data, int conditioning,
                         const FitOptions& options = {});

}  // namespace qcut

#endif
