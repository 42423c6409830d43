// Copyright (c) 2026 qcut developers
// SPDX-License-Identifier: Apache-2.0

#include "qcut/circuit.hpp"

#include <Eigen/QR>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qcut/rng.hpp"

namespace qcut {

void CircuitIR::add_gate(const CMatrix& u, std::vector<int> qubits, int layer, GateClass cls) {
  Gate g;
  g.unitary = u;
  g.qubits = std::move(qubits);
  g.layer = layer;
  g.gate_class = cls;
  gates.push_back(std::move(g));
}

void CircuitIR::validate() const {
  if (num_qubits <= 0) throw std::invalid_argument("CircuitIR: num_qubits must be positive");
  for (std::size_t gi = 0; gi < gates.size(); ++gi) {
    const Gate& g = gates[gi];
    const Eigen::Index d = Eigen::Index(1) << g.qubits.size();
    if (g.unitary.rows() != d || g.unitary.cols() != d) {
      std::ostringstream msg;
      msg << "CircuitIR: gate " << gi << " dimension mismatch";
      throw std::invalid_argument(msg.str());
    }
    if (!is_unitary(g.unitary)) {
      std::ostringstream msg;
      msg << "CircuitIR: gate " << gi << " is not unitary";
      throw std::invalid_argument(msg.str());
    }
    std::set<int> seen;
    for (int q : g.qubits) {
      if (q < 0 || q >= num_qubits) {
        std::ostringstream msg;
        msg << "CircuitIR: gate " << gi << " qubit " << q << " out of range";
        throw std::invalid_argument(msg.str());
      }
      if (!seen.insert(q).second)
        throw std::invalid_argument("CircuitIR: gate acts twice on the same qubit");
    }
  }
}

int CircuitIR::num_layers() const {
  int layers = 0;
  for (const Gate& g : gates) layers = std::max(layers, g.layer + 1);
  return layers;
}

CMatrix haar_unitary(int dim, Rng& rng) {
  CMatrix g(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j)
    for (Eigen::Index i = 0; i < dim; ++i) g(i, j) = cplx(rng.normal(), rng.normal());
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    cplx d = r(j, j);
    double a = std::abs(d);
    q.col(j) *= (a > 0 ? d / a : cplx(1.0, 0.0));
  }
  return q;
}

CircuitIR gen_cluster_unitary(int num_qubits, int layers, std::uint64_t seed) {
  if (num_qubits < 2 || num_qubits % 2 != 0)
    throw std::invalid_argument("gen_cluster_unitary: brickwork requires even n >= 2");
  if (layers < 1) throw std::invalid_argument("gen_cluster_unitary: layers must be >= 1");
  CircuitIR circ;
  circ.num_qubits = num_qubits;
  for (int layer = 0; layer < layers; ++layer) {
    int start = (layer % 2 == 0) ? 0 : 1;
    for (int q = start; q + 1 < num_qubits; q += 2) {
      Rng rng(substream(seed, {std::uint64_t(layer), std::uint64_t(q)}));
      circ.add_gate(haar_unitary(4, rng), {q, q + 1}, layer, GateClass::TwoQubit);
    }
  }
  return circ;
}

CircuitIR make_ghz_circuit(int num_qubits) {
  if (num_qubits < 2) throw std::invalid_argument("make_ghz_circuit: need at least 2 qubits");
  CircuitIR circ;
  circ.num_qubits = num_qubits;
  circ.add_gate(hadamard(), {0}, 0, GateClass::OneQubit);
  for (int q = 0; q + 1 < num_qubits; ++q)
    circ.add_gate(cnot(), {q, q + 1}, q + 1, GateClass::TwoQubit);
  return circ;
}

}  // namespace qcut
