// Copyright (c) 2026 qcut developers
// SPDX-License-Identifier: Apache-2.0

#ifndef QCUT_CUT_HPP
#define QCUT_CUT_HPP

#include <vector>

#include "qcut/circuit.hpp"

namespace qcut {

// A cut point severs the wire of `qubit` between gate layers `after_layer`
// and `after_layer` + 1.
struct CutPoint {
  int qubit = 0;
  int after_layer = 0;
  friend bool operator==(const CutPoint&, const CutPoint&) = default;
};
using CutSpec = std::vector<CutPoint>;

enum class FragmentKind { State, Channel, Povm };

// A connected sub-circuit produced by cutting. Wires are local qubit
// indices of `circuit`; each wire is one segment of an original qubit
// wire. A wire either starts at |0> or at a cut (tomographic preparation),
// and either ends at a cut (tomographic measurement) or at the original
// terminal Z-measurement (a conditioning wire).
struct Fragment {
  CircuitIR circuit;
  FragmentKind kind = FragmentKind::Channel;

  std::vector<int> cut_inputs;        // local wires prepared tomographically
  std::vector<int> cut_input_edges;   // cut-edge id per cut input
  std::vector<int> cut_outputs;       // local wires measured tomographically
  std::vector<int> cut_output_edges;  // cut-edge id per cut output

  std::vector<int> conditioning_wires;   // local wires with original measurements
  std::vector<int> conditioning_qubits;  // original qubit index per wire

  int k_in() const { return int(cut_inputs.size()); }
  int k_out() const { return int(cut_outputs.size()); }
  int num_conditioning() const { return int(conditioning_wires.size()); }
  int num_wires() const { return circuit.num_qubits; }
};

// Directed cut edge: upstream fragment's cut-output slot feeds the
// downstream fragment's cut-input slot.
struct CutEdge {
  int id = 0;
  int from_fragment = 0;
  int from_slot = 0;  // index into fragments[from_fragment].cut_outputs
  int to_fragment = 0;
  int to_slot = 0;  // index into fragments[to_fragment].cut_inputs
};

struct CutCircuit {
  int num_qubits = 0;  // original circuit width
  std::vector<Fragment> fragments;
  std::vector<CutEdge> edges;
};

// Cut a circuit along the given wire cut points. Every original gate lands
// in exactly one fragment; throws if the cuts do not disconnect the gate
// graph, if cut points repeat or fall outside the layer range, or if any
// fragment exceeds `max_fragment_qubits` wires.
CutCircuit apply_cut(const CircuitIR& circuit, const CutSpec& cuts,
                     int max_fragment_qubits = 10);

// The two-cuts-around-the-middle-layer pattern for brickwork cluster
// circuits: severs wire n/2-1 before and after the middle layer so the
// circuit splits into two channel fragments with one cut input and one cut
// output each.
CutSpec middle_cut(const CircuitIR& cluster);

// Tomographic preparations {|0>,|1>,|+>,|+i>} (index 0..3) and measurement
// bases {X,Y,Z} (index 0..2) with outcome projectors.
const CMatrix& prep_state(int index);         // density matrix, trace 1, rank 1
const CMatrix& prep_rotation(int index);      // unitary with U|0> = prep
const CMatrix& basis_rotation(int index);     // maps basis eigenstates to Z
CMatrix povm_element(int basis, int outcome);  // projector of the basis outcome

// A runnable circuit for one tomography setting: cut inputs initialized to
// the indexed preparation, cut outputs rotated into the indexed basis, all
// wires terminally Z-measured. Tomography gates are noise-exempt.
CircuitIR fragment_circuit_instance(const Fragment& fragment,
                                    const std::vector<int>& prep_indices,
                                    const std::vector<int>& basis_indices);

}  // namespace qcut

#endif
