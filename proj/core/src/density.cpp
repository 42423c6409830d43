// Copyright (c) 2026 qcut developers
// SPDX-License-Identifier: Apache-2.0

#include "qcut/density.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qcut/linalg.hpp"

namespace qcut {

namespace {

// Scatter the k-bit local index g onto the global qubit positions.
inline Eigen::Index expand_bits(int g, const std::vector<int>& qubits) {
  Eigen::Index out = 0;
  for (std::size_t j = 0; j < qubits.size(); ++j)
    if ((g >> j) & 1) out |= Eigen::Index(1) << qubits[j];
  return out;
}

inline Eigen::Index qubit_mask(const std::vector<int>& qubits) {
  Eigen::Index mask = 0;
  for (int q : qubits) mask |= Eigen::Index(1) << q;
  return mask;
}

void check_targets(const std::vector<int>& qubits, int num_qubits, Eigen::Index op_dim) {
  if (qubits.empty()) throw std::invalid_argument("local apply: no target qubits");
  if (op_dim != (Eigen::Index(1) << qubits.size()))
    throw std::invalid_argument("local apply: operator dimension mismatch");
  Eigen::Index mask = 0;
  for (int q : qubits) {
    if (q < 0 || q >= num_qubits) throw std::invalid_argument("local apply: qubit out of range");
    Eigen::Index bit = Eigen::Index(1) << q;
    if (mask & bit) throw std::invalid_argument("local apply: repeated target qubit");
    mask |= bit;
  }
}

}  // namespace

void apply_left(CMatrix& rho, const CMatrix& op, const std::vector<int>& qubits, int num_qubits) {
  check_targets(qubits, num_qubits, op.rows());
  const Eigen::Index d = Eigen::Index(1) << num_qubits;
  const int sub = int(op.rows());
  const Eigen::Index mask = qubit_mask(qubits);
  std::vector<Eigen::Index> offs(sub);
  for (int g = 0; g < sub; ++g) offs[g] = expand_bits(g, qubits);
  std::vector<cplx> amp(sub);
  for (Eigen::Index c = 0; c < rho.cols(); ++c) {
    cplx* col = rho.data() + c * d;
    for (Eigen::Index base = 0; base < d; ++base) {
      if (base & mask) continue;
      for (int g = 0; g < sub; ++g) amp[g] = col[base + offs[g]];
      for (int h = 0; h < sub; ++h) {
        cplx acc = 0.0;
        for (int g = 0; g < sub; ++g) acc += op(h, g) * amp[g];
        col[base + offs[h]] = acc;
      }
    }
  }
}

void apply_right_dagger(CMatrix& rho, const CMatrix& op, const std::vector<int>& qubits,
                        int num_qubits) {
  check_targets(qubits, num_qubits, op.rows());
  const Eigen::Index d = Eigen::Index(1) << num_qubits;
  const int sub = int(op.rows());
  const Eigen::Index mask = qubit_mask(qubits);
  std::vector<Eigen::Index> offs(sub);
  for (int g = 0; g < sub; ++g) offs[g] = expand_bits(g, qubits);
  CMatrix cols(d, sub);
  for (Eigen::Index base = 0; base < d; ++base) {
    if (base & mask) continue;
    for (int g = 0; g < sub; ++g) cols.col(g) = rho.col(base + offs[g]);
    for (int h = 0; h < sub; ++h) {
      auto target = rho.col(base + offs[h]);
      target.setZero();
      for (int g = 0; g < sub; ++g) target += std::conj(op(h, g)) * cols.col(g);
    }
  }
}

void apply_unitary(CMatrix& rho, const CMatrix& u, const std::vector<int>& qubits, int num_qubits) {
  apply_left(rho, u, qubits, num_qubits);
  apply_right_dagger(rho, u, qubits, num_qubits);
}

void apply_kraus_local(CMatrix& rho, const std::vector<CMatrix>& kraus,
                       const std::vector<int>& qubits, int num_qubits) {
  if (kraus.empty()) throw std::invalid_argument("apply_kraus_local: empty Kraus set");
  CMatrix acc = CMatrix::Zero(rho.rows(), rho.cols());
  for (const CMatrix& k : kraus) {
    CMatrix term = rho;
    apply_left(term, k, qubits, num_qubits);
    apply_right_dagger(term, k, qubits, num_qubits);
    acc += term;
  }
  rho = std::move(acc);
}

CMatrix simulate_density_matrix(const CircuitIR& circuit, const NoiseSpec& noise, int max_qubits) {
  circuit.validate();
  noise.validate();
  if (circuit.num_qubits > max_qubits) {
    std::ostringstream msg;
    msg << "simulate_density_matrix: " << circuit.num_qubits << " qubits exceeds the limit of "
        << max_qubits;
    throw std::invalid_argument(msg.str());
  }
  const Eigen::Index d = Eigen::Index(1) << circuit.num_qubits;
  CMatrix rho = CMatrix::Zero(d, d);
  rho(0, 0) = 1.0;

  std::vector<CMatrix> kraus2, kraus1;
  if (noise.two_qubit_channel) kraus2 = choi_to_kraus(*noise.two_qubit_channel);
  if (noise.one_qubit_channel) kraus1 = choi_to_kraus(*noise.one_qubit_channel);

  for (const Gate& g : circuit.gates) {
    apply_unitary(rho, g.unitary, g.qubits, circuit.num_qubits);
    const std::vector<CMatrix>* chan = nullptr;
    if (g.gate_class == GateClass::TwoQubit && !kraus2.empty()) chan = &kraus2;
    if (g.gate_class == GateClass::OneQubit && !kraus1.empty()) chan = &kraus1;
    if (chan)
      for (int rep = 0; rep < noise.noise_multiplicity; ++rep)
        apply_kraus_local(rho, *chan, g.qubits, circuit.num_qubits);
  }
  return rho;
}

std::vector<double> outcome_distribution(const CMatrix& rho, const AssignmentMatrix& assignment) {
  check_assignment(assignment);
  if (rho.rows() != rho.cols()) throw std::invalid_argument("outcome_distribution: non-square state");
  const Eigen::Index d = rho.rows();
  int n = 0;
  while ((Eigen::Index(1) << n) < d) ++n;
  if ((Eigen::Index(1) << n) != d)
    throw std::invalid_argument("outcome_distribution: dimension is not a power of two");
  std::vector<double> probs(d);
  for (Eigen::Index i = 0; i < d; ++i) probs[i] = rho(i, i).real();
  const bool ideal = (assignment - AssignmentMatrix::Identity()).cwiseAbs().maxCoeff() == 0.0;
  if (!ideal) {
    for (int q = 0; q < n; ++q) {
      const Eigen::Index bit = Eigen::Index(1) << q;
      for (Eigen::Index i = 0; i < d; ++i) {
        if (i & bit) continue;
        double p0 = probs[i], p1 = probs[i | bit];
        probs[i] = assignment(0, 0) * p0 + assignment(0, 1) * p1;
        probs[i | bit] = assignment(1, 0) * p0 + assignment(1, 1) * p1;
      }
    }
  }
  return probs;
}

std::vector<double> outcome_distribution(const CMatrix& rho) {
  return outcome_distribution(rho, AssignmentMatrix::Identity());
}

std::vector<std::uint64_t> sample_counts(const std::vector<double>& probs, std::uint64_t shots,
                                         std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample_counts: shots must be >= 1");
  Rng rng(seed);
  return rng.multinomial(probs, shots);
}

std::vector<double> ideal_outcome_distribution(const CircuitIR& circuit) {
  circuit.validate();
  const Eigen::Index d = Eigen::Index(1) << circuit.num_qubits;
  CVector state = CVector::Zero(d);
  state(0) = 1.0;
  std::vector<cplx> amp;
  for (const Gate& g : circuit.gates) {
    const int sub = int(g.unitary.rows());
    const Eigen::Index mask = qubit_mask(g.qubits);
    std::vector<Eigen::Index> offs(sub);
    for (int x = 0; x < sub; ++x) offs[x] = expand_bits(x, g.qubits);
    amp.resize(sub);
    for (Eigen::Index base = 0; base < d; ++base) {
      if (base & mask) continue;
      for (int x = 0; x < sub; ++x) amp[x] = state(base + offs[x]);
      for (int h = 0; h < sub; ++h) {
        cplx acc = 0.0;
        for (int x = 0; x < sub; ++x) acc += g.unitary(h, x) * amp[x];
        state(base + offs[h]) = acc;
      }
    }
  }
  std::vector<double> probs(d);
  for (Eigen::Index i = 0; i < d; ++i) probs[i] = std::norm(state(i));
  return probs;
}

}  // namespace qcut
