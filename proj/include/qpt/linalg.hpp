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

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace qpt {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

inline Matrix dagger(const Matrix& m) { return m.adjoint(); }

bool is_hermitian(const Matrix& m, double tol);

// Smallest eigenvalue of a (nearly) Hermitian matrix.
double min_eigenvalue(const Matrix& m);

// Largest |entry| of m - m', elementwise.
double max_abs_diff(const Matrix& a, const Matrix& b);

// Number of qubits for a dimension-2^m vector/matrix; throws if not a power of two.
int qubit_count_for_dim(Eigen::Index dim);

// Reorder the qubits of a 2^m-dimensional ket: target position i holds the
// qubits of source position perm[i]. Qubit 0 is the most significant bit.
Vector permute_qubits(const Vector& v, const std::vector<int>& perm);
Matrix permute_qubits(const Matrix& m, const std::vector<int>& perm);

// Fix the global phase so the first amplitude above threshold is real positive.
Vector phase_fixed(const Vector& v, double threshold = 1e-9);

// Schmidt rank across the cut after the first `left_qubits` qubits.
int schmidt_rank(const Vector& v, int left_qubits, double tol = 1e-9);

// Shortest-width formatting that round-trips a double exactly.
std::string format_double(double x);

}  // namespace qpt
