// Copyright (c) 2026 qcut developers
// SPDX-License-Identifier: Apache-2.0

#include "qcut/cut.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qcut {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

CutCircuit apply_cut(const CircuitIR& circuit, const CutSpec& cuts, int max_fragment_qubits) {
  circuit.validate();
  if (cuts.empty())
    throw std::invalid_argument("apply_cut: empty cut specification cannot disconnect the circuit");
  const int n = circuit.num_qubits;
  const int layers = circuit.num_layers();

  std::set<std::pair<int, int>> seen;
  std::vector<std::vector<int>> cuts_on(n);  // sorted after_layer values per qubit
  for (const CutPoint& c : cuts) {
    if (c.qubit < 0 || c.qubit >= n) throw std::invalid_argument("apply_cut: cut qubit out of range");
    if (c.after_layer < 0 || c.after_layer >= layers - 1)
      throw std::invalid_argument("apply_cut: cut position must lie between two gate layers");
    if (!seen.insert({c.qubit, c.after_layer}).second)
      throw std::invalid_argument("apply_cut: duplicate cut point");
    cuts_on[c.qubit].push_back(c.after_layer);
  }
  for (auto& v : cuts_on) std::sort(v.begin(), v.end());

  // Wire segments: qubit q splits into cuts_on[q].size() + 1 segments.
  std::vector<int> seg_base(n + 1, 0);
  for (int q = 0; q < n; ++q) seg_base[q + 1] = seg_base[q] + int(cuts_on[q].size()) + 1;
  const int total_segments = seg_base[n];

  auto segment_of = [&](int q, int layer) {
    const auto& v = cuts_on[q];
    return int(std::upper_bound(v.begin(), v.end(), layer - 1) - v.begin());
  };
  auto seg_id = [&](int q, int s) { return seg_base[q] + s; };

  UnionFind uf(total_segments);
  for (const Gate& g : circuit.gates)
    for (std::size_t i = 1; i < g.qubits.size(); ++i)
      uf.unite(seg_id(g.qubits[0], segment_of(g.qubits[0], g.layer)),
               seg_id(g.qubits[i], segment_of(g.qubits[i], g.layer)));

  // Deterministic fragment numbering: first-seen root in (qubit, segment) order.
  std::map<int, int> root_to_fragment;
  std::vector<int> fragment_of_segment(total_segments);
  for (int q = 0; q < n; ++q) {
    for (int s = 0; s <= int(cuts_on[q].size()); ++s) {
      int root = uf.find(seg_id(q, s));
      auto [it, inserted] = root_to_fragment.insert({root, int(root_to_fragment.size())});
      fragment_of_segment[seg_id(q, s)] = it->second;
    }
  }
  const int num_fragments = int(root_to_fragment.size());
  if (num_fragments < 2)
    throw std::invalid_argument("apply_cut: cuts do not disconnect the circuit");

  CutCircuit out;
  out.num_qubits = n;
  out.fragments.resize(num_fragments);

  // Local wire numbering per fragment, in (qubit, segment) order.
  std::vector<int> local_wire(total_segments, -1);
  for (int q = 0; q < n; ++q) {
    for (int s = 0; s <= int(cuts_on[q].size()); ++s) {
      int f = fragment_of_segment[seg_id(q, s)];
      Fragment& frag = out.fragments[f];
      local_wire[seg_id(q, s)] = frag.circuit.num_qubits++;
      const bool last_segment = (s == int(cuts_on[q].size()));
      if (last_segment) {
        frag.conditioning_wires.push_back(local_wire[seg_id(q, s)]);
        frag.conditioning_qubits.push_back(q);
      }
    }
  }
  for (const Fragment& frag : out.fragments) {
    if (frag.circuit.num_qubits > max_fragment_qubits) {
      std::ostringstream msg;
      msg << "apply_cut: fragment with " << frag.circuit.num_qubits
          << " wires exceeds the limit of " << max_fragment_qubits;
      throw std::invalid_argument(msg.str());
    }
  }

  // Cut edges, in specification order.
  for (std::size_t ci = 0; ci < cuts.size(); ++ci) {
    const CutPoint& c = cuts[ci];
    const auto& v = cuts_on[c.qubit];
    int pos = int(std::lower_bound(v.begin(), v.end(), c.after_layer) - v.begin());
    int up = seg_id(c.qubit, pos);
    int down = seg_id(c.qubit, pos + 1);
    CutEdge edge;
    edge.id = int(ci);
    edge.from_fragment = fragment_of_segment[up];
    edge.to_fragment = fragment_of_segment[down];
    Fragment& uf_frag = out.fragments[edge.from_fragment];
    Fragment& df_frag = out.fragments[edge.to_fragment];
    edge.from_slot = int(uf_frag.cut_outputs.size());
    uf_frag.cut_outputs.push_back(local_wire[up]);
    uf_frag.cut_output_edges.push_back(edge.id);
    edge.to_slot = int(df_frag.cut_inputs.size());
    df_frag.cut_inputs.push_back(local_wire[down]);
    df_frag.cut_input_edges.push_back(edge.id);
    out.edges.push_back(edge);
  }

  // Gates, preserving original order; every gate lands in one fragment.
  for (const Gate& g : circuit.gates) {
    int f = fragment_of_segment[seg_id(g.qubits[0], segment_of(g.qubits[0], g.layer))];
    Gate local = g;
    for (std::size_t i = 0; i < g.qubits.size(); ++i)
      local.qubits[i] = local_wire[seg_id(g.qubits[i], segment_of(g.qubits[i], g.layer))];
    out.fragments[f].circuit.gates.push_back(std::move(local));
  }

  for (Fragment& frag : out.fragments) {
    if (frag.k_in() > 0 && frag.k_out() > 0)
      frag.kind = FragmentKind::Channel;
    else if (frag.k_in() > 0)
      frag.kind = FragmentKind::Povm;
    else
      frag.kind = FragmentKind::State;
  }
  return out;
}

CutSpec middle_cut(const CircuitIR& cluster) {
  const int layers = cluster.num_layers();
  if (layers < 2) throw std::invalid_argument("middle_cut: need at least two layers");
  const int q_mid = cluster.num_qubits / 2 - 1;
  const int l_mid = layers / 2;
  return {{q_mid, l_mid - 1}, {q_mid, l_mid}};
}

//------------------------------------------------------------------------
// Tomographic preparations and measurement bases
//------------------------------------------------------------------------

const CMatrix& prep_state(int index) {
  static const std::vector<CMatrix> states = [] {
    std::vector<CMatrix> v;
    v.push_back(ketbra(0));  // |0><0|
    v.push_back(ketbra(1));  // |1><1|
    CMatrix plus(2, 2), plus_i(2, 2);
    plus << 0.5, 0.5, 0.5, 0.5;
    plus_i << 0.5, cplx(0, -0.5), cplx(0, 0.5), 0.5;
    v.push_back(plus);    // |+><+|
    v.push_back(plus_i);  // |+i><+i|
    return v;
  }();
  if (index < 0 || index >= 4) throw std::invalid_argument("prep_state: index out of range");
  return states[index];
}

const CMatrix& prep_rotation(int index) {
  static const std::vector<CMatrix> rot = [] {
    std::vector<CMatrix> v;
    v.push_back(CMatrix::Identity(2, 2));
    v.push_back(pauli_x());
    v.push_back(hadamard());
    v.push_back(CMatrix(s_gate() * hadamard()));  // S H |0> = |+i>
    return v;
  }();
  if (index < 0 || index >= 4) throw std::invalid_argument("prep_rotation: index out of range");
  return rot[index];
}

const CMatrix& basis_rotation(int index) {
  static const std::vector<CMatrix> rot = [] {
    std::vector<CMatrix> v;
    v.push_back(hadamard());                                 // X basis
    v.push_back(CMatrix(hadamard() * s_gate().adjoint()));   // Y basis
    v.push_back(CMatrix::Identity(2, 2));                    // Z basis
    return v;
  }();
  if (index < 0 || index >= 3) throw std::invalid_argument("basis_rotation: index out of range");
  return rot[index];
}

CMatrix povm_element(int basis, int outcome) {
  if (outcome != 0 && outcome != 1) throw std::invalid_argument("povm_element: outcome must be 0/1");
  const CMatrix& u = basis_rotation(basis);
  return u.adjoint() * ketbra(outcome) * u;
}

CircuitIR fragment_circuit_instance(const Fragment& fragment,
                                    const std::vector<int>& prep_indices,
                                    const std::vector<int>& basis_indices) {
  if (int(prep_indices.size()) != fragment.k_in())
    throw std::invalid_argument("fragment_circuit_instance: one preparation index per cut input");
  if (int(basis_indices.size()) != fragment.k_out())
    throw std::invalid_argument("fragment_circuit_instance: one basis index per cut output");

  CircuitIR circ;
  circ.num_qubits = fragment.circuit.num_qubits;
  const int last_layer = fragment.circuit.num_layers();
  for (int i = 0; i < fragment.k_in(); ++i) {
    int p = prep_indices[i];
    if (p < 0 || p >= 4) throw std::invalid_argument("fragment_circuit_instance: prep index out of range");
    circ.add_gate(prep_rotation(p), {fragment.cut_inputs[i]}, -1, GateClass::Tomography);
  }
  for (const Gate& g : fragment.circuit.gates) circ.gates.push_back(g);
  for (int i = 0; i < fragment.k_out(); ++i) {
    int b = basis_indices[i];
    if (b < 0 || b >= 3) throw std::invalid_argument("fragment_circuit_instance: basis index out of range");
    circ.add_gate(basis_rotation(b), {fragment.cut_outputs[i]}, last_layer, GateClass::Tomography);
  }
  return circ;
}

}  // namespace qcut
