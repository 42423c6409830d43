// Copyright (c) 2026 qcut developers
// SPDX-License-Identifier: Apache-2.0

#ifndef QCUT_CIRCUIT_HPP
#define QCUT_CIRCUIT_HPP

#include <cstdint>
#include <vector>

#include "qcut/types.hpp"

namespace qcut {

// Gate classes drive noise attachment: OneQubit/TwoQubit circuit gates
// receive the configured channel of their class, Tomography gates
// (preparation and basis-change rotations inserted by the tomography
// machinery) are noise-exempt.
enum class GateClass { OneQubit, TwoQubit, Tomography };

struct Gate {
  CMatrix unitary;          // 2^k x 2^k, k = qubits.size()
  std::vector<int> qubits;  // qubits[0] is the low bit of the gate's index
  int layer = 0;
  GateClass gate_class = GateClass::TwoQubit;
};

// Gate-list circuit on n qubits with implicit terminal Z-measurements on
// every qubit. Qubit 0 is the least significant bit of basis indices.
struct CircuitIR {
  int num_qubits = 0;
  std::vector<Gate> gates;

  void add_gate(const CMatrix& u, std::vector<int> qubits, int layer,
                GateClass cls);
  // Checks unitarity of every gate and index ranges; throws on violation.
  void validate() const;
  int num_layers() const;
};

// Brickwork cluster circuit: `layers` alternating layers of Haar-random
// two-qubit unitaries, odd layers on pairs (0,1),(2,3),..., even layers on
// (1,2),(3,4),.... Requires even n >= 2. Deterministic for a fixed seed.
CircuitIR gen_cluster_unitary(int num_qubits, int layers, std::uint64_t seed);

// Haar-random unitary of dimension d via QR of a complex Ginibre matrix
// with R-diagonal phase correction.
CMatrix haar_unitary(int dim, class Rng& rng);

// n-qubit GHZ preparation circuit: H on qubit 0 then a CNOT chain. Used by
// tests and the generate tool's examples.
CircuitIR make_ghz_circuit(int num_qubits);

}  // namespace qcut

#endif
