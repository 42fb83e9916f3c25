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

#include <vector>

#include "qpt/pauli.hpp"
#include "qpt/state.hpp"

namespace qpt {

// CP map as a Kraus set. Sum K'K <= I is enforced; trace-decreasing maps
// (loss, leakage) are first-class, no dilation is performed.
class QuantumChannel {
 public:
  QuantumChannel(std::vector<Matrix> kraus_operators, int qubit_count);
  const std::vector<Matrix>& kraus() const { return kraus_; }
  int qubit_count() const { return qubit_count_; }
  Eigen::Index dim() const { return Eigen::Index{1} << qubit_count_; }
  bool trace_preserving(double tol = 1e-10) const;

 private:
  std::vector<Matrix> kraus_;
  int qubit_count_;
};

// Process matrix chi_mn of Lambda(rho) = sum_mn chi_mn s_m rho s_n' in the
// unnormalized Pauli basis, ordered as pauli_basis(qubit_count).
class ChiMatrix {
 public:
  ChiMatrix(Matrix entries, int qubit_count);
  const Matrix& entries() const { return entries_; }
  int qubit_count() const { return qubit_count_; }
  Eigen::Index basis_dim() const { return entries_.rows(); }

 private:
  Matrix entries_;
  int qubit_count_;
};

DensityMatrix apply_channel(const QuantumChannel& ch, const DensityMatrix& rho);
DensityMatrix apply_chi(const ChiMatrix& chi, const DensityMatrix& rho);

ChiMatrix kraus_to_chi(const QuantumChannel& ch);
// Eigendecomposition of chi; eigenvalues below -1e-8 are rejected as
// unphysical, eigenvalues below 1e-12 are dropped.
QuantumChannel chi_to_kraus(const ChiMatrix& chi);

// I - sum K'K as a Hermitian matrix (all-zero iff trace-preserving).
Matrix trace_deficit_operator(const QuantumChannel& ch);

QuantumChannel tensor(const QuantumChannel& a, const QuantumChannel& b);

// Single-qubit presets.
QuantumChannel identity_channel(int qubit_count = 1);
QuantumChannel depolarizing(double p);
QuantumChannel bit_flip(double p);
QuantumChannel amplitude_damping(double gamma);
QuantumChannel damping_dephasing(double gamma, double lambda);
QuantumChannel loss_channel(double eta);

}  // namespace qpt
