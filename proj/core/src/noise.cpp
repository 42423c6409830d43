// Copyright (c) 2026 qcut developers
// SPDX-License-Identifier: Apache-2.0

#include "qcut/noise.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qcut/linalg.hpp"

namespace qcut {

AssignmentMatrix make_assignment(double p_meas) {
  if (!(p_meas >= 0.0 && p_meas <= 0.5))
    throw std::invalid_argument("make_assignment: p_meas must lie in [0, 0.5]");
  AssignmentMatrix a;
  a << 1.0 - p_meas, p_meas, p_meas, 1.0 - p_meas;
  return a;
}

void check_assignment(const AssignmentMatrix& a) {
  for (int j = 0; j < 2; ++j) {
    double col = a(0, j) + a(1, j);
    if (std::abs(col - 1.0) > 1e-12)
      throw std::invalid_argument("assignment matrix columns must sum to 1");
    for (int i = 0; i < 2; ++i)
      if (a(i, j) < 0.0 || a(i, j) > 1.0)
        throw std::invalid_argument("assignment matrix entries must lie in [0, 1]");
  }
}

namespace {

ChoiTensor tensor_power_channel(const std::vector<CMatrix>& kraus_1q, int num_qubits) {
  std::vector<CMatrix> kraus = kraus_1q;
  for (int q = 1; q < num_qubits; ++q) {
    std::vector<CMatrix> next;
    next.reserve(kraus.size() * kraus_1q.size());
    // qubit q is the left kron factor relative to qubits below it
    for (const CMatrix& hi : kraus_1q)
      for (const CMatrix& lo : kraus) next.push_back(kron(hi, lo));
    kraus = std::move(next);
  }
  return kraus_to_choi(kraus, num_qubits, num_qubits);
}

std::vector<CMatrix> amplitude_damping_kraus(double gamma) {
  CMatrix k0(2, 2), k1(2, 2);
  k0 << 1.0, 0.0, 0.0, std::sqrt(1.0 - gamma);
  k1 << 0.0, std::sqrt(gamma), 0.0, 0.0;
  return {k0, k1};
}

std::vector<CMatrix> biased_pauli_kraus(double p, double bias) {
  double p_i = 1.0 - (3.0 + bias) * p;
  return {std::sqrt(p_i) * pauli_i(), std::sqrt(p) * pauli_x(), std::sqrt(p) * pauli_y(),
          std::sqrt(p * (1.0 + bias)) * pauli_z()};
}

}  // namespace

ChoiTensor make_channel(ChannelKind kind, const ChannelParams& params, int num_qubits) {
  if (num_qubits < 1 || num_qubits > 2)
    throw std::invalid_argument("make_channel: only 1- and 2-qubit channels are supported");
  switch (kind) {
    case ChannelKind::Depolarizing: {
      const double p = params.p;
      if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("make_channel: depolarizing p must lie in [0, 1]");
      const Eigen::Index d = Eigen::Index(1) << num_qubits;
      // (1-p) identity + p * (rho -> Tr[rho] I/d); the latter has Choi I/d.
      ChoiTensor id = choi_of_unitary(CMatrix::Identity(d, d));
      CMatrix m = (1.0 - p) * id.matrix + (p / double(d)) * CMatrix::Identity(d * d, d * d);
      return make_channel_tensor(num_qubits, num_qubits, m);
    }
    case ChannelKind::BiasedPauli: {
      const double p = params.p, b = params.bias;
      if (p < 0.0 || (3.0 + b) * p > 1.0 + 1e-15 || p * (1.0 + b) < -1e-15)
        throw std::invalid_argument("make_channel: invalid biased-Pauli parameters");
      return tensor_power_channel(biased_pauli_kraus(p, b), num_qubits);
    }
    case ChannelKind::AmplitudeDamping: {
      const double g = params.gamma;
      if (!(g >= 0.0 && g <= 1.0))
        throw std::invalid_argument("make_channel: gamma must lie in [0, 1]");
      return tensor_power_channel(amplitude_damping_kraus(g), num_qubits);
    }
    case ChannelKind::CoherentCnot: {
      if (num_qubits != 2)
        throw std::invalid_argument("make_channel: coherent-cnot is a 2-qubit channel");
      if (!std::isfinite(params.delta_theta))
        throw std::invalid_argument("make_channel: delta_theta must be finite");
      CMatrix h = matrix_log_unitary(cnot());
      CMatrix u = exp_i_hermitian(-params.delta_theta * h);
      return choi_of_unitary(u);
    }
  }
  throw std::invalid_argument("make_channel: unknown channel kind");
}

double PauliChannelParams::identity_probability() const {
  double total = 0.0;
  for (const auto& [label, p] : probabilities)
    if (label != 0) total += p;
  return 1.0 - total;
}

void PauliChannelParams::validate() const {
  if (num_qubits < 1) throw std::invalid_argument("PauliChannelParams: bad qubit count");
  const int labels = 1 << (2 * num_qubits);
  double total = 0.0;
  for (const auto& [label, p] : probabilities) {
    if (label < 0 || label >= labels)
      throw std::invalid_argument("PauliChannelParams: label out of range");
    if (p < -1e-12 || p > 1.0 + 1e-12)
      throw std::invalid_argument("PauliChannelParams: probability out of [0, 1]");
    if (label != 0) total += p;
  }
  if (total > 1.0 + 1e-9)
    throw std::invalid_argument("PauliChannelParams: probabilities sum above 1");
}

std::vector<CMatrix> pauli_channel_kraus(const PauliChannelParams& params) {
  params.validate();
  std::vector<CMatrix> kraus;
  double p_id = params.identity_probability();
  if (p_id > 0.0)
    kraus.push_back(std::sqrt(p_id) *
                    CMatrix::Identity(Eigen::Index(1) << params.num_qubits,
                                      Eigen::Index(1) << params.num_qubits));
  for (const auto& [label, p] : params.probabilities) {
    if (label == 0 || p <= 0.0) continue;
    kraus.push_back(std::sqrt(p) * pauli_string_matrix(params.num_qubits, label));
  }
  return kraus;
}

ChoiTensor pauli_channel_choi(const PauliChannelParams& params) {
  return kraus_to_choi(pauli_channel_kraus(params), params.num_qubits, params.num_qubits);
}

PauliChannelParams pauli_twirl(const ChoiTensor& channel) {
  if (channel.num_in_qubits != channel.num_out_qubits)
    throw std::invalid_argument("pauli_twirl: channel must be square");
  const int n = channel.num_in_qubits;
  if (n < 1 || n > 2) throw std::invalid_argument("pauli_twirl: supported on 1 or 2 qubits");
  if (!is_cptp(channel)) throw std::invalid_argument("pauli_twirl: channel is not CPTP");

  const int labels = 1 << (2 * n);
  std::vector<double> ptm(labels);
  for (int p = 0; p < labels; ++p) ptm[p] = ptm_diagonal_entry(channel, p);

  // chi(Q, P) = +1 if the Pauli strings commute, -1 otherwise; the
  // probabilities are the chi-transform (Walsh-Hadamard over the
  // symplectic characters) of the PTM diagonal.
  auto commutes_1q = [](int a, int b) { return a == 0 || b == 0 || a == b; };
  PauliChannelParams out;
  out.num_qubits = n;
  std::vector<double> probs(labels, 0.0);
  double total = 0.0;
  for (int q = 0; q < labels; ++q) {
    double acc = 0.0;
    for (int p = 0; p < labels; ++p) {
      int sign = 1;
      for (int w = 0; w < n; ++w) {
        int aq = (q >> (2 * w)) & 3, ap = (p >> (2 * w)) & 3;
        if (!commutes_1q(aq, ap)) sign = -sign;
      }
      acc += sign * ptm[p];
    }
    double prob = acc / double(labels);
    if (prob < -1e-6) {
      std::ostringstream msg;
      msg << "pauli_twirl: channel is not twirlable to a valid Pauli channel (p = " << prob << ")";
      throw std::invalid_argument(msg.str());
    }
    probs[q] = std::max(prob, 0.0);
    total += probs[q];
  }
  for (int q = 0; q < labels; ++q) {
    double p = probs[q] / total;
    if (q != 0 && p > 0.0) out.probabilities[q] = p;
  }
  return out;
}

double process_fidelity(const ChoiTensor& channel) {
  if (channel.num_in_qubits != channel.num_out_qubits)
    throw std::invalid_argument("process_fidelity: channel must be square");
  const Eigen::Index d = channel.dim_in();
  CVector id_vec = vectorize(CMatrix::Identity(d, d));
  cplx overlap = id_vec.adjoint() * channel.matrix * id_vec;
  return overlap.real() / double(d * d);
}

double average_gate_fidelity(const ChoiTensor& channel) {
  const double d = double(channel.dim_in());
  return (d * process_fidelity(channel) + 1.0) / (d + 1.0);
}

double clifford_twirl(const ChoiTensor& channel) {
  if (!is_cptp(channel)) throw std::invalid_argument("clifford_twirl: channel is not CPTP");
  const double d = double(channel.dim_in());
  // Depolarizing with probability p has F_pro = (1-p) + p/d^2; match F_pro
  // (equivalently F_avg, they are affinely related).
  double f_pro = process_fidelity(channel);
  return (1.0 - f_pro) / (1.0 - 1.0 / (d * d));
}

void NoiseSpec::validate() const {
  if (two_qubit_channel) {
    if (two_qubit_channel->num_in_qubits != 2 || two_qubit_channel->num_out_qubits != 2)
      throw std::invalid_argument("NoiseSpec: two_qubit_channel must act on 2 qubits");
    if (!is_cptp(*two_qubit_channel))
      throw std::invalid_argument("NoiseSpec: two_qubit_channel is not CPTP");
  }
  if (one_qubit_channel) {
    if (one_qubit_channel->num_in_qubits != 1 || one_qubit_channel->num_out_qubits != 1)
      throw std::invalid_argument("NoiseSpec: one_qubit_channel must act on 1 qubit");
    if (!is_cptp(*one_qubit_channel))
      throw std::invalid_argument("NoiseSpec: one_qubit_channel is not CPTP");
  }
  check_assignment(make_assignment(p_meas));
  if (noise_multiplicity < 1)
    throw std::invalid_argument("NoiseSpec: noise_multiplicity must be >= 1");
}

}  // namespace qcut
