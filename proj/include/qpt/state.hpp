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

#pragma once

#include "qpt/linalg.hpp"

namespace qpt {

// Normalized pure state on 2^m amplitudes; validated on construction.
class KetVector {
 public:
  explicit KetVector(Vector amplitudes);
  const Vector& amplitudes() const { return amplitudes_; }
  int qubit_count() const { return qubit_count_; }
  Eigen::Index dim() const { return amplitudes_.size(); }

 private:
  Vector amplitudes_;
  int qubit_count_;
};

// Hermitian, positive semidefinite, trace <= 1 (trace deficits model loss).
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix entries);
  static DensityMatrix pure(const KetVector& k);
  const Matrix& entries() const { return entries_; }
  int qubit_count() const { return qubit_count_; }
  Eigen::Index dim() const { return entries_.rows(); }
  double trace() const { return entries_.trace().real(); }

 private:
  Matrix entries_;
  int qubit_count_;
};

KetVector computational_ket(int qubits, Eigen::Index basis_state);

}  // namespace qpt
