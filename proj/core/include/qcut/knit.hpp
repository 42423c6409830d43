// Copyright (c) 2026 qcut developers
// SPDX-License-Identifier: Apache-2.0

#ifndef QCUT_KNIT_HPP
#define QCUT_KNIT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qcut/cut.hpp"
#include "qcut/fit.hpp"
#include "qcut/noise.hpp"

namespace qcut {

// Reconstructed (or directly measured) probability vector over n-bit
// outcomes plus provenance.
struct OutcomeDistribution {
  std::vector<double> probabilities;  // size 2^n, bit q of the index = qubit q
  std::string fitter;                 // "lin", "cls", "memcls", "uncut", ...
  bool devt = false;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  double pre_normalization_mass = 1.0;
};

// Fragment network: the cut graph plus one set of conditional tensors per
// fragment. Contractions consume each cut edge exactly once; the final
// network has no open cut wires.
struct FragmentTensors {
  std::vector<std::vector<ChoiTensor>> blocks;  // [fragment][conditioning outcome]
};

// Raw contraction value for one global outcome: picks each fragment's
// conditional tensor from the bits of `outcome` on that fragment's
// conditioning qubits and contracts all cut edges pairwise. The value may
// be slightly negative for fitted tensors.
double contract(const CutCircuit& cut, const FragmentTensors& tensors,
                std::uint64_t outcome);

// All 2^n outcomes: raw contraction, then clamp negatives and renormalize.
// The raw total is recorded as pre_normalization_mass; a non-positive raw
// mass is rejected.
OutcomeDistribution full_distribution(const CutCircuit& cut, const FragmentTensors& tensors);

// Expectation value of a Z-diagonal Pauli observable (string over {I, Z},
// character q = original qubit q) evaluated by marginalizing conditional
// tensors over qubits outside the support before contracting. Writes the
// number of contractions performed to *contraction_count if non-null.
double pauli_expectation(const CutCircuit& cut, const FragmentTensors& tensors,
                         const std::string& observable,
                         std::size_t* contraction_count = nullptr);

double expectation_from_distribution(const std::vector<double>& probs,
                                     const std::string& observable);

// Half 1-norm distance between outcome distributions of equal length.
double trace_distance(const std::vector<double>& p, const std::vector<double>& q);

// Tensor-product A-matrix inversion readout mitigation for uncut
// measurement data: applies ((x)_q A)^-1, clamps negatives, renormalizes.
std::vector<double> mitigate_readout_uncut(const std::vector<double>& empirical,
                                           const AssignmentMatrix& assignment);

// Assemble FragmentTensors from per-fragment fit results (order must match
// cut.fragments). Optionally apply weighted dominant-eigenvalue truncation
// to every conditional tensor.
FragmentTensors tensors_from_fits(const std::vector<FitResult>& fits, bool apply_devt);

}  // namespace qcut

#endif
