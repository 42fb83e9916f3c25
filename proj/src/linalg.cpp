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

#include "qpt/linalg.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace qpt {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

bool is_hermitian(const Matrix& m, double tol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double min_eigenvalue(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()),
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

int qubit_count_for_dim(Eigen::Index dim) {
  int m = 0;
  Eigen::Index d = 1;
  while (d < dim) {
    d <<= 1;
    ++m;
  }
  if (d != dim)
    throw std::invalid_argument("dimension " + std::to_string(dim) +
                                " is not a power of two");
  return m;
}

namespace {

// Map a basis index through the qubit permutation (qubit 0 = MSB).
Eigen::Index permuted_index(Eigen::Index out, int m, const std::vector<int>& perm) {
  Eigen::Index src = 0;
  for (int i = 0; i < m; ++i) {
    const Eigen::Index bit = (out >> (m - 1 - i)) & 1;
    if (bit) src |= Eigen::Index{1} << (m - 1 - perm[static_cast<size_t>(i)]);
  }
  return src;
}

}  // namespace

Vector permute_qubits(const Vector& v, const std::vector<int>& perm) {
  const int m = qubit_count_for_dim(v.size());
  if (static_cast<int>(perm.size()) != m)
    throw std::invalid_argument("permutation size does not match qubit count");
  Vector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(permuted_index(i, m, perm));
  return out;
}

Matrix permute_qubits(const Matrix& mat, const std::vector<int>& perm) {
  const int m = qubit_count_for_dim(mat.rows());
  Matrix out(mat.rows(), mat.cols());
  for (Eigen::Index i = 0; i < mat.rows(); ++i)
    for (Eigen::Index j = 0; j < mat.cols(); ++j)
      out(i, j) = mat(permuted_index(i, m, perm), permuted_index(j, m, perm));
  return out;
}

Vector phase_fixed(const Vector& v, double threshold) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > threshold) {
      return v * (std::conj(v(i)) / a);
    }
  }
  return v;
}

int schmidt_rank(const Vector& v, int left_qubits, double tol) {
  const int m = qubit_count_for_dim(v.size());
  if (left_qubits <= 0 || left_qubits >= m)
    throw std::invalid_argument("schmidt_rank: cut must be interior");
  const Eigen::Index rows = Eigen::Index{1} << left_qubits;
  const Eigen::Index cols = v.size() / rows;
  Matrix reshaped(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) reshaped(i, j) = v(i * cols + j);
  Eigen::JacobiSVD<Matrix> svd(reshaped);
  int rank = 0;
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
    if (svd.singularValues()(k) > tol) ++rank;
  return rank;
}

std::string format_double(double x) {
  char buf[64];
  // %.17g always round-trips; try shorter widths first for cleaner files.
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == x || (std::isnan(back) && std::isnan(x))) return buf;
  }
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace qpt
