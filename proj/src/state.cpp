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

#include "qpt/state.hpp"

#include <cmath>
#include <stdexcept>

namespace qpt {

KetVector::KetVector(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
  qubit_count_ = qubit_count_for_dim(amplitudes_.size());
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-12)
    throw std::invalid_argument("ket is not normalized (|norm^2 - 1| = " +
                                std::to_string(std::abs(norm2 - 1.0)) + ")");
}

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols())
    throw std::invalid_argument("density matrix must be square");
  qubit_count_ = qubit_count_for_dim(entries_.rows());
  if (!is_hermitian(entries_, 1e-12))
    throw std::invalid_argument("density matrix is not Hermitian");
  if (min_eigenvalue(entries_) < -1e-10)
    throw std::invalid_argument("density matrix has a negative eigenvalue");
  if (entries_.trace().real() > 1.0 + 1e-12)
    throw std::invalid_argument("density matrix trace exceeds 1");
}

DensityMatrix DensityMatrix::pure(const KetVector& k) {
  return DensityMatrix(k.amplitudes() * k.amplitudes().adjoint());
}

KetVector computational_ket(int qubits, Eigen::Index basis_state) {
  Vector v = Vector::Zero(Eigen::Index{1} << qubits);
  v(basis_state) = 1.0;
  return KetVector(std::move(v));
}

}  // namespace qpt
