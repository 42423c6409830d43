// Copyright (c) 2026 qcut developers
// SPDX-License-Identifier: Apache-2.0

#include "qcut/choi.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qcut/linalg.hpp"

namespace qcut {

void ChoiTensor::check_shape() const {
  if (num_in_qubits < 0 || num_out_qubits < 0)
    throw std::invalid_argument("ChoiTensor: negative qubit count");
  if (matrix.rows() != dim() || matrix.cols() != dim())
    throw std::invalid_argument("ChoiTensor: matrix dimension does not match qubit counts");
  if (!is_finite(matrix)) throw std::invalid_argument("ChoiTensor: non-finite entries");
}

void ChoiTensor::check_hermitian(double tolerance) const {
  double defect = hermiticity_defect(matrix);
  if (!(defect <= tolerance)) {
    std::ostringstream msg;
    msg << "ChoiTensor: not Hermitian (defect " << defect << ")";
    throw std::invalid_argument(msg.str());
  }
}

void ChoiTensor::check_psd(double tolerance) const {
  EigSystem es = eig_hermitian(matrix, std::max(tol::hermitian, 10 * tolerance));
  if (es.eigenvalues.size() > 0 && es.eigenvalues(0) < -tolerance) {
    std::ostringstream msg;
    msg << "ChoiTensor: negative eigenvalue " << es.eigenvalues(0);
    throw std::invalid_argument(msg.str());
  }
}

void ChoiTensor::check_trace_preserving(double tolerance) const {
  CMatrix reduced = partial_trace_minor(matrix, dim_in(), dim_out());
  double defect = (reduced - CMatrix::Identity(dim_in(), dim_in())).cwiseAbs().maxCoeff();
  if (!(defect <= tolerance)) {
    std::ostringstream msg;
    msg << "ChoiTensor: Tr_out deviates from identity by " << defect;
    throw std::invalid_argument(msg.str());
  }
}

ChoiTensor make_state_tensor(const CMatrix& rho) {
  int n = 0;
  while ((Eigen::Index(1) << n) < rho.rows()) ++n;
  if ((Eigen::Index(1) << n) != rho.rows() || rho.rows() != rho.cols())
    throw std::invalid_argument("make_state_tensor: dimension is not a power of two");
  ChoiTensor t;
  t.num_in_qubits = 0;
  t.num_out_qubits = n;
  t.kind = ChoiKind::State;
  t.matrix = rho;
  t.check_shape();
  return t;
}

ChoiTensor make_channel_tensor(int in_qubits, int out_qubits, const CMatrix& m) {
  ChoiTensor t;
  t.num_in_qubits = in_qubits;
  t.num_out_qubits = out_qubits;
  t.kind = out_qubits == 0 ? ChoiKind::PovmElement
                           : (in_qubits == 0 ? ChoiKind::State : ChoiKind::Channel);
  t.matrix = m;
  t.check_shape();
  return t;
}

ChoiTensor choi_of_unitary(const CMatrix& u) {
  if (!is_unitary(u)) throw std::invalid_argument("choi_of_unitary: input is not unitary");
  int n = 0;
  while ((Eigen::Index(1) << n) < u.rows()) ++n;
  CVector v = vectorize(u);
  ChoiTensor t;
  t.num_in_qubits = n;
  t.num_out_qubits = n;
  t.kind = ChoiKind::Channel;
  t.matrix = v * v.adjoint();
  return t;
}

ChoiTensor kraus_to_choi(const std::vector<CMatrix>& kraus, int in_qubits, int out_qubits) {
  if (kraus.empty()) throw std::invalid_argument("kraus_to_choi: empty Kraus set");
  const Eigen::Index d_in = Eigen::Index(1) << in_qubits;
  const Eigen::Index d_out = Eigen::Index(1) << out_qubits;
  CMatrix total = CMatrix::Zero(d_in, d_in);
  CMatrix choi = CMatrix::Zero(d_in * d_out, d_in * d_out);
  for (const CMatrix& k : kraus) {
    if (k.rows() != d_out || k.cols() != d_in)
      throw std::invalid_argument("kraus_to_choi: Kraus operator shape mismatch");
    total += k.adjoint() * k;
    // Column-stacking vec of a d_out x d_in operator indexes (i, a) as
    // i * d_out + a, which is exactly the (input-major) Choi layout.
    CVector v = vectorize(k);
    choi += v * v.adjoint();
  }
  EigSystem es = eig_hermitian(total);
  if (es.eigenvalues(es.eigenvalues.size() - 1) > 1.0 + tol::psd)
    throw std::invalid_argument("kraus_to_choi: sum K^dagger K exceeds identity");
  return make_channel_tensor(in_qubits, out_qubits, choi);
}

std::vector<CMatrix> choi_to_kraus(const ChoiTensor& choi, double cutoff) {
  choi.check_shape();
  EigSystem es = eig_hermitian(choi.matrix);
  if (es.eigenvalues(0) < -tol::psd) {
    std::ostringstream msg;
    msg << "choi_to_kraus: Choi matrix has negative eigenvalue " << es.eigenvalues(0);
    throw std::invalid_argument(msg.str());
  }
  std::vector<CMatrix> kraus;
  // Descending order so <<K_i|K_i>> = lambda_i is non-increasing.
  for (Eigen::Index i = es.eigenvalues.size() - 1; i >= 0; --i) {
    double lambda = es.eigenvalues(i);
    if (lambda <= cutoff) continue;
    CVector v = std::sqrt(lambda) * es.eigenvectors.col(i);
    kraus.push_back(devectorize(v, choi.dim_out(), choi.dim_in()));
  }
  if (kraus.empty()) kraus.push_back(CMatrix::Zero(choi.dim_out(), choi.dim_in()));
  return kraus;
}

CMatrix apply_choi(const ChoiTensor& choi, const CMatrix& rho) {
  const Eigen::Index d_in = choi.dim_in();
  const Eigen::Index d_out = choi.dim_out();
  if (rho.rows() != d_in || rho.cols() != d_in)
    throw std::invalid_argument("apply_choi: state dimension mismatch");
  CMatrix out = CMatrix::Zero(d_out, d_out);
  for (Eigen::Index i = 0; i < d_in; ++i)
    for (Eigen::Index j = 0; j < d_in; ++j)
      out += rho(i, j) * choi.matrix.block(i * d_out, j * d_out, d_out, d_out);
  return out;
}

CMatrix apply_kraus(const std::vector<CMatrix>& kraus, const CMatrix& rho) {
  if (kraus.empty()) throw std::invalid_argument("apply_kraus: empty Kraus set");
  CMatrix out = CMatrix::Zero(kraus[0].rows(), kraus[0].rows());
  for (const CMatrix& k : kraus) out += k * rho * k.adjoint();
  return out;
}

bool is_cptp(const ChoiTensor& choi, double psd_tol, double tp_tol) {
  try {
    choi.check_shape();
    choi.check_hermitian(std::max(tol::hermitian, psd_tol));
    choi.check_psd(psd_tol);
    choi.check_trace_preserving(tp_tol);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

CMatrix pauli_string_matrix(int num_qubits, int pauli_index) {
  CMatrix out = CMatrix::Identity(1, 1);
  // qubit q is the q-th base-4 digit and the q-th (low) bit, so higher
  // qubits are the left kron factors
  for (int q = num_qubits - 1; q >= 0; --q) {
    int digit = (pauli_index / static_cast<int>(std::pow(4, q))) % 4;
    out = kron(out, pauli(digit));
  }
  return out;
}

double ptm_diagonal_entry(const ChoiTensor& choi, int pauli_index) {
  if (choi.num_in_qubits != choi.num_out_qubits)
    throw std::invalid_argument("ptm_diagonal_entry: channel must be square");
  const int n = choi.num_in_qubits;
  CMatrix p = pauli_string_matrix(n, pauli_index);
  CMatrix image = apply_choi(choi, p);
  return (p * image).trace().real() / double(choi.dim_in());
}

}  // namespace qcut
