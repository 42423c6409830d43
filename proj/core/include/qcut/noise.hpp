// Copyright (c) 2026 qcut developers
// SPDX-License-Identifier: Apache-2.0

#ifndef QCUT_NOISE_HPP
#define QCUT_NOISE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcut/choi.hpp"

namespace qcut {

//------------------------------------------------------------------------
// Assignment matrices (classical readout confusion)
//------------------------------------------------------------------------

// 2x2 column-stochastic matrix A[recorded][true] = P(record r | true t).
using AssignmentMatrix = Eigen::Matrix2d;

// Symmetric single-qubit assignment matrix [[1-p, p], [p, 1-p]],
// p in [0, 0.5].
AssignmentMatrix make_assignment(double p_meas);

void check_assignment(const AssignmentMatrix& a);

//------------------------------------------------------------------------
// Channel constructors
//------------------------------------------------------------------------

enum class ChannelKind { Depolarizing, BiasedPauli, AmplitudeDamping, CoherentCnot };

struct ChannelParams {
  double p = 0.0;      // depolarizing probability / Pauli X,Y probability
  double bias = 0.0;   // Pauli Z bias: p_z = p (1 + bias)
  double gamma = 0.0;  // amplitude damping rate
  double delta_theta = 0.0;  // coherent rotation angle
};

// Build a gate-noise channel.
//   Depolarizing:      rho -> (1-p) rho + p I/d on the full n-qubit space.
//   BiasedPauli:       tensor power of the 1-qubit channel
//                      (1-(3+b)p) rho + p X rho X + p Y rho Y + p(1+b) Z rho Z.
//   AmplitudeDamping:  tensor power of the 1-qubit Kraus pair
//                      K0 = diag(1, sqrt(1-g)), K1 = [[0, sqrt(g)], [0, 0]].
//   CoherentCnot:      unitary channel of exp(-i dtheta H) with
//                      H = log(CNOT)/(-i); 2-qubit only.
ChoiTensor make_channel(ChannelKind kind, const ChannelParams& params, int num_qubits);

//------------------------------------------------------------------------
// Pauli channels and twirling
//------------------------------------------------------------------------

// Probability map over n-qubit Pauli strings (base-4 labels, digit q =
// Pauli on qubit q, 0..3 = I,X,Y,Z). p_I is 1 - sum of the others.
struct PauliChannelParams {
  int num_qubits = 1;
  std::map<int, double> probabilities;  // non-identity entries

  double identity_probability() const;
  void validate() const;
};

ChoiTensor pauli_channel_choi(const PauliChannelParams& params);
std::vector<CMatrix> pauli_channel_kraus(const PauliChannelParams& params);

// Pauli-twirled approximation: the Pauli channel whose transfer-matrix
// diagonal equals the input channel's. Probabilities are recovered via the
// Walsh-Hadamard transform of the PTM diagonal, clipped at -1e-12 and
// renormalized; entries below -1e-6 reject the channel as not twirlable.
PauliChannelParams pauli_twirl(const ChoiTensor& channel);

// Clifford-twirled approximation: depolarizing probability with the same
// average gate fidelity as the input channel.
double clifford_twirl(const ChoiTensor& channel);

// Process fidelity <<I|L|I>>/d^2 and average gate fidelity (d F_pro + 1)/(d+1).
double process_fidelity(const ChoiTensor& channel);
double average_gate_fidelity(const ChoiTensor& channel);

//------------------------------------------------------------------------
// NoiseSpec
//------------------------------------------------------------------------

// Parametrized error model attached to gate classes plus per-qubit
// readout. `noise_multiplicity` applies the gate channel that many times
// per gate (emulating multi-entangler decompositions).
struct NoiseSpec {
  std::optional<ChoiTensor> two_qubit_channel;
  std::optional<ChoiTensor> one_qubit_channel;
  double p_meas = 0.0;  // symmetric readout error on every measured qubit
  int noise_multiplicity = 1;

  bool has_gate_noise() const {
    return two_qubit_channel.has_value() || one_qubit_channel.has_value();
  }
  AssignmentMatrix assignment() const { return make_assignment(p_meas); }
  void validate() const;
};

}  // namespace qcut

#endif
