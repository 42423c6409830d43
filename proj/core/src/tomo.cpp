// Copyright (c) 2026 qcut developers
// SPDX-License-Identifier: Apache-2.0

#include "qcut/tomo.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qcut/density.hpp"
#include "qcut/linalg.hpp"

namespace qcut {

TomoBasis::TomoBasis(int k_in, int k_out) : k_in_(k_in), k_out_(k_out) {
  if (k_in < 0 || k_out < 0 || k_in + k_out == 0)
    throw std::invalid_argument("TomoBasis: need at least one cut wire");
}

TomoBasis::TomoBasis(int k_in, int k_out, const AssignmentMatrix& cut_assignment)
    : TomoBasis(k_in, k_out) {
  check_assignment(cut_assignment);
  noisy_ = true;
  assignment_ = cut_assignment;
}

int TomoBasis::num_preps() const { return int(std::pow(4, k_in_)); }
int TomoBasis::num_bases() const { return int(std::pow(3, k_out_)); }
int TomoBasis::num_outcomes() const { return 1 << k_out_; }

CMatrix TomoBasis::element(int prep, int basis, int outcome) const {
  if (prep < 0 || prep >= num_preps()) throw std::invalid_argument("TomoBasis: prep out of range");
  if (basis < 0 || basis >= num_bases()) throw std::invalid_argument("TomoBasis: basis out of range");
  if (outcome < 0 || outcome >= num_outcomes())
    throw std::invalid_argument("TomoBasis: outcome out of range");

  CMatrix in_part = CMatrix::Identity(1, 1);
  for (int w = k_in_ - 1; w >= 0; --w) {
    int digit = (prep / int(std::pow(4, w))) % 4;
    in_part = kron(in_part, prep_state(digit).transpose());
  }
  CMatrix out_part = CMatrix::Identity(1, 1);
  for (int w = k_out_ - 1; w >= 0; --w) {
    int b = (basis / int(std::pow(3, w))) % 3;
    int o = (outcome >> w) & 1;
    CMatrix m = povm_element(b, o);
    if (noisy_) m = assignment_(o, o) * povm_element(b, o) + assignment_(o, 1 - o) * povm_element(b, 1 - o);
    out_part = kron(out_part, m);
  }
  return kron(in_part, out_part);
}

DualBasis dual_basis(const std::vector<CMatrix>& elements, bool allow_deficient,
                     double max_condition) {
  if (elements.empty()) throw std::invalid_argument("dual_basis: empty element set");
  const Eigen::Index d = elements.front().rows();
  const Eigen::Index d2 = d * d;
  CMatrix frame = CMatrix::Zero(d2, d2);
  for (const CMatrix& b : elements) {
    if (b.rows() != d || b.cols() != d) throw std::invalid_argument("dual_basis: shape mismatch");
    CVector v = vectorize(b);
    frame += v * v.adjoint();
  }
  EigSystem es = eig_hermitian(frame, 1e-8);
  const double lam_max = es.eigenvalues(d2 - 1);
  const double rcond_cut = lam_max / max_condition;
  int rank = 0;
  double lam_min_kept = lam_max;
  for (Eigen::Index i = 0; i < d2; ++i) {
    if (es.eigenvalues(i) > rcond_cut) {
      ++rank;
      lam_min_kept = std::min(lam_min_kept, es.eigenvalues(i));
    }
  }
  if (rank < d2 && !allow_deficient) {
    std::ostringstream msg;
    msg << "dual_basis: tomographically incomplete basis (frame rank " << rank << " of " << d2
        << ")";
    throw std::invalid_argument(msg.str());
  }
  // Pseudo-inverse on the kept spectrum.
  CVector inv_ev = CVector::Zero(d2);
  for (Eigen::Index i = 0; i < d2; ++i)
    if (es.eigenvalues(i) > rcond_cut) inv_ev(i) = 1.0 / es.eigenvalues(i);
  CMatrix pinv = es.eigenvectors * inv_ev.asDiagonal() * es.eigenvectors.adjoint();

  DualBasis out;
  out.rank = rank;
  out.condition_number = lam_max / lam_min_kept;
  out.duals.reserve(elements.size());
  for (const CMatrix& b : elements) out.duals.push_back(devectorize(pinv * vectorize(b), d, d));
  return out;
}

std::vector<ChoiTensor> exact_conditional_tensors(const Fragment& fragment,
                                                  const NoiseSpec& noise) {
  noise.validate();
  const int wires = fragment.num_wires();
  const int k_in = fragment.k_in();
  const int k_out = fragment.k_out();
  const int m = fragment.num_conditioning();
  const Eigen::Index d_in = Eigen::Index(1) << k_in;
  const Eigen::Index d_out = Eigen::Index(1) << k_out;
  const Eigen::Index d_full = Eigen::Index(1) << wires;

  std::vector<CMatrix> kraus2, kraus1;
  if (noise.two_qubit_channel) kraus2 = choi_to_kraus(*noise.two_qubit_channel);
  if (noise.one_qubit_channel) kraus1 = choi_to_kraus(*noise.one_qubit_channel);

  std::vector<ChoiTensor> tensors(std::size_t(1) << m);
  for (auto& t : tensors) {
    t.num_in_qubits = k_in;
    t.num_out_qubits = k_out;
    t.kind = k_out == 0 ? ChoiKind::PovmElement
                        : (k_in == 0 ? ChoiKind::State : ChoiKind::Channel);
    t.matrix = CMatrix::Zero(d_in * d_out, d_in * d_out);
  }

  for (Eigen::Index bi = 0; bi < d_in; ++bi) {
    for (Eigen::Index bj = 0; bj < d_in; ++bj) {
      // Initial matrix: |bi><bj| distributed over the cut-input wires,
      // |0><0| elsewhere. Evolution is linear, so running the simulator on
      // operator-basis inputs recovers the full process action.
      CMatrix rho = CMatrix::Zero(d_full, d_full);
      Eigen::Index row = 0, col = 0;
      for (int a = 0; a < k_in; ++a) {
        if ((bi >> a) & 1) row |= Eigen::Index(1) << fragment.cut_inputs[a];
        if ((bj >> a) & 1) col |= Eigen::Index(1) << fragment.cut_inputs[a];
      }
      rho(row, col) = 1.0;
      for (const Gate& g : fragment.circuit.gates) {
        apply_unitary(rho, g.unitary, g.qubits, wires);
        const std::vector<CMatrix>* chan = nullptr;
        if (g.gate_class == GateClass::TwoQubit && !kraus2.empty()) chan = &kraus2;
        if (g.gate_class == GateClass::OneQubit && !kraus1.empty()) chan = &kraus1;
        if (chan)
          for (int rep = 0; rep < noise.noise_multiplicity; ++rep)
            apply_kraus_local(rho, *chan, g.qubits, wires);
      }
      // Project conditioning wires on |s>, keep cut outputs.
      for (Eigen::Index r = 0; r < d_full; ++r) {
        Eigen::Index s = 0, a = 0;
        for (int t = 0; t < m; ++t)
          if ((r >> fragment.conditioning_wires[t]) & 1) s |= Eigen::Index(1) << t;
        for (int t = 0; t < k_out; ++t)
          if ((r >> fragment.cut_outputs[t]) & 1) a |= Eigen::Index(1) << t;
        for (Eigen::Index b = 0; b < d_out; ++b) {
          Eigen::Index c = r;
          for (int t = 0; t < k_out; ++t) {
            Eigen::Index bit = Eigen::Index(1) << fragment.cut_outputs[t];
            if ((b >> t) & 1)
              c |= bit;
            else
              c &= ~bit;
          }
          tensors[s].matrix(bi * d_out + a, bj * d_out + b) += rho(r, c);
        }
      }
    }
  }
  return tensors;
}

}  // namespace qcut
