// Copyright (c) 2026 qcut developers
// SPDX-License-Identifier: Apache-2.0

#ifndef QCUT_DENSITY_HPP
#define QCUT_DENSITY_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "qcut/circuit.hpp"
#include "qcut/noise.hpp"
#include "qcut/rng.hpp"

namespace qcut {

// Apply a k-qubit operator on the given qubits of an n-qubit matrix, from
// the left (rho <- U_local rho) or right (rho <- rho U_local^dagger).
// qubits[0] addresses the low bit of the operator's own index space.
void apply_left(CMatrix& rho, const CMatrix& op, const std::vector<int>& qubits, int num_qubits);
void apply_right_dagger(CMatrix& rho, const CMatrix& op, const std::vector<int>& qubits, int num_qubits);

// rho <- U rho U^dagger on the given qubits.
void apply_unitary(CMatrix& rho, const CMatrix& u, const std::vector<int>& qubits, int num_qubits);

// rho <- sum_k K rho K^dagger on the given qubits.
void apply_kraus_local(CMatrix& rho, const std::vector<CMatrix>& kraus,
                       const std::vector<int>& qubits, int num_qubits);

// Noisy density-matrix simulation: start at |0...0><0...0|, apply each gate
// as a unitary conjugation followed by its gate-class noise channel (if
// configured), `noise_multiplicity` times. Tomography-class gates are
// noise-exempt. Rejects circuits wider than `max_qubits`.
CMatrix simulate_density_matrix(const CircuitIR& circuit, const NoiseSpec& noise,
                                int max_qubits = 12);

// Z-basis outcome probabilities of a density matrix under per-qubit
// readout confusion: probs = ((x)_q A) diag(rho). Bit q of the outcome
// index is qubit q.
std::vector<double> outcome_distribution(const CMatrix& rho, const AssignmentMatrix& assignment);
std::vector<double> outcome_distribution(const CMatrix& rho);

// Multinomial counts from a probability vector; deterministic per seed.
std::vector<std::uint64_t> sample_counts(const std::vector<double>& probs,
                                         std::uint64_t shots, std::uint64_t seed);

// Statevector simulation of a noise-free circuit (pure evolution from
// |0...0>); used as an independent cross-check of the density path and as
// the fast ideal-reference route.
std::vector<double> ideal_outcome_distribution(const CircuitIR& circuit);

}  // namespace qcut

#endif
