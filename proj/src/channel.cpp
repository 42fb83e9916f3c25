// Copyright 2026 The qptbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpt/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace qpt {

QuantumChannel::QuantumChannel(std::vector<Matrix> kraus_operators,
                               int qubit_count)
    : kraus_(std::move(kraus_operators)), qubit_count_(qubit_count) {
  if (kraus_.empty()) throw std::invalid_argument("empty Kraus set");
  const Eigen::Index d = dim();
  for (const Matrix& k : kraus_)
    if (k.rows() != d || k.cols() != d)
      throw std::invalid_argument("Kraus operator dimension mismatch");
  if (min_eigenvalue(trace_deficit_operator(*this)) < -1e-10)
    throw std::invalid_argument("Kraus set exceeds trace preservation");
}

bool QuantumChannel::trace_preserving(double tol) const {
  return trace_deficit_operator(*this).cwiseAbs().maxCoeff() <= tol;
}

Matrix trace_deficit_operator(const QuantumChannel& ch) {
  const Eigen::Index d = ch.dim();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& k : ch.kraus()) sum += k.adjoint() * k;
  return Matrix::Identity(d, d) - sum;
}

ChiMatrix::ChiMatrix(Matrix entries, int qubit_count)
    : entries_(std::move(entries)), qubit_count_(qubit_count) {
  const Eigen::Index expected = Eigen::Index{1} << (2 * qubit_count);
  if (entries_.rows() != expected || entries_.cols() != expected)
    throw std::invalid_argument("chi matrix must be d^2 x d^2");
  if (!is_hermitian(entries_, 1e-10))
    throw std::invalid_argument("chi matrix is not Hermitian");
}

DensityMatrix apply_channel(const QuantumChannel& ch, const DensityMatrix& rho) {
  if (rho.dim() != ch.dim())
    throw std::invalid_argument("apply_channel: dimension mismatch");
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (const Matrix& k : ch.kraus()) out += k * rho.entries() * k.adjoint();
  return DensityMatrix(std::move(out));
}

DensityMatrix apply_chi(const ChiMatrix& chi, const DensityMatrix& rho) {
  if (rho.qubit_count() != chi.qubit_count())
    throw std::invalid_argument("apply_chi: dimension mismatch");
  const auto basis = pauli_basis(chi.qubit_count());
  std::vector<Matrix> transformed(basis.size());
  for (size_t m = 0; m < basis.size(); ++m)
    transformed[m] = basis[m].matrix() * rho.entries();
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (size_t m = 0; m < basis.size(); ++m) {
    Matrix acc = Matrix::Zero(rho.dim(), rho.dim());
    for (size_t n = 0; n < basis.size(); ++n) {
      const Complex c = chi.entries()(static_cast<Eigen::Index>(m),
                                      static_cast<Eigen::Index>(n));
      if (std::abs(c) > 0.0) acc += c * basis[n].matrix().adjoint();
    }
    out += transformed[m] * acc;
  }
  return DensityMatrix(0.5 * (out + out.adjoint()));
}

ChiMatrix kraus_to_chi(const QuantumChannel& ch) {
  const auto basis = pauli_basis(ch.qubit_count());
  const auto d = static_cast<double>(ch.dim());
  const auto dim2 = static_cast<Eigen::Index>(basis.size());
  Matrix chi = Matrix::Zero(dim2, dim2);
  for (const Matrix& k : ch.kraus()) {
    Vector coeff(dim2);
    for (Eigen::Index m = 0; m < dim2; ++m)
      coeff(m) = (basis[static_cast<size_t>(m)].matrix() * k).trace() / d;
    chi += coeff * coeff.adjoint();
  }
  return ChiMatrix(std::move(chi), ch.qubit_count());
}

QuantumChannel chi_to_kraus(const ChiMatrix& chi) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(chi.entries());
  if (es.eigenvalues().minCoeff() < -1e-8)
    throw std::invalid_argument(
        "chi matrix is not positive semidefinite (min eigenvalue " +
        std::to_string(es.eigenvalues().minCoeff()) + ")");
  const auto basis = pauli_basis(chi.qubit_count());
  const Eigen::Index d = Eigen::Index{1} << chi.qubit_count();
  std::vector<Matrix> kraus;
  for (Eigen::Index j = 0; j < es.eigenvalues().size(); ++j) {
    const double lambda = es.eigenvalues()(j);
    if (lambda < 1e-12) continue;
    Matrix k = Matrix::Zero(d, d);
    for (Eigen::Index m = 0; m < static_cast<Eigen::Index>(basis.size()); ++m)
      k += es.eigenvectors()(m, j) * basis[static_cast<size_t>(m)].matrix();
    kraus.push_back(std::sqrt(lambda) * k);
  }
  if (kraus.empty())
    throw std::invalid_argument("chi matrix has no significant eigenvalues");
  return QuantumChannel(std::move(kraus), chi.qubit_count());
}

QuantumChannel tensor(const QuantumChannel& a, const QuantumChannel& b) {
  std::vector<Matrix> kraus;
  for (const Matrix& ka : a.kraus())
    for (const Matrix& kb : b.kraus()) kraus.push_back(kron(ka, kb));
  return QuantumChannel(std::move(kraus), a.qubit_count() + b.qubit_count());
}

QuantumChannel identity_channel(int qubit_count) {
  const Eigen::Index d = Eigen::Index{1} << qubit_count;
  return QuantumChannel({Matrix::Identity(d, d)}, qubit_count);
}

namespace {
void check_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
}
}  // namespace

QuantumChannel depolarizing(double p) {
  check_unit_interval(p, "p");
  std::vector<Matrix> kraus{std::sqrt(1.0 - 0.75 * p) * single_pauli('I')};
  for (char c : {'X', 'Y', 'Z'})
    kraus.push_back(std::sqrt(0.25 * p) * single_pauli(c));
  return QuantumChannel(std::move(kraus), 1);
}

QuantumChannel bit_flip(double p) {
  check_unit_interval(p, "p");
  return QuantumChannel({std::sqrt(1.0 - p) * single_pauli('I'),
                         std::sqrt(p) * single_pauli('X')},
                        1);
}

QuantumChannel amplitude_damping(double gamma) {
  check_unit_interval(gamma, "gamma");
  Matrix k0(2, 2), k1(2, 2);
  k0 << 1, 0, 0, std::sqrt(1.0 - gamma);
  k1 << 0, std::sqrt(gamma), 0, 0;
  return QuantumChannel({k0, k1}, 1);
}

QuantumChannel damping_dephasing(double gamma, double lambda) {
  check_unit_interval(gamma, "gamma");
  check_unit_interval(lambda, "lambda");
  const QuantumChannel ad = amplitude_damping(gamma);
  const Matrix z = single_pauli('Z');
  std::vector<Matrix> kraus;
  for (const Matrix& k : ad.kraus()) {
    if (lambda < 1.0) kraus.push_back(std::sqrt(1.0 - lambda) * k);
    if (lambda > 0.0) kraus.push_back(std::sqrt(lambda) * (z * k));
  }
  return QuantumChannel(std::move(kraus), 1);
}

QuantumChannel loss_channel(double eta) {
  check_unit_interval(eta, "eta");
  return QuantumChannel({std::sqrt(1.0 - eta) * single_pauli('I')}, 1);
}

}  // namespace qpt
