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

#include "qpt/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace qpt {

namespace {
constexpr int kMaxQubits = 16;

int label_rank(char c) {
  switch (c) {
    case 'I': return 0;
    case 'X': return 1;
    case 'Y': return 2;
    case 'Z': return 3;
  }
  throw std::invalid_argument(std::string("invalid Pauli label '") + c + "'");
}
}  // namespace

PauliString::PauliString(std::string_view labels) {
  if (labels.empty() || labels.size() > kMaxQubits)
    throw std::invalid_argument("Pauli string length must be in [1, 16]");
  qubits_ = static_cast<int>(labels.size());
  for (int k = 0; k < qubits_; ++k) {
    switch (labels[static_cast<size_t>(k)]) {
      case 'I': break;
      case 'X': x_ |= 1u << k; break;
      case 'Z': z_ |= 1u << k; break;
      case 'Y': x_ |= 1u << k; z_ |= 1u << k; break;
      default:
        throw std::invalid_argument("invalid Pauli label in \"" +
                                    std::string(labels) + "\"");
    }
  }
}

PauliString PauliString::identity(int qubits) {
  if (qubits < 1 || qubits > kMaxQubits)
    throw std::invalid_argument("qubit count must be in [1, 16]");
  return PauliString(0, 0, qubits);
}

PauliString PauliString::from_bits(std::uint32_t x, std::uint32_t z, int qubits) {
  if (qubits < 1 || qubits > kMaxQubits)
    throw std::invalid_argument("qubit count must be in [1, 16]");
  const std::uint32_t mask = (qubits == 32) ? ~0u : ((1u << qubits) - 1);
  if ((x & ~mask) || (z & ~mask))
    throw std::invalid_argument("bit mask exceeds qubit count");
  return PauliString(x, z, qubits);
}

char PauliString::label(int k) const {
  if (k < 0 || k >= qubits_) throw std::out_of_range("qubit index");
  const bool x = (x_ >> k) & 1, z = (z_ >> k) & 1;
  return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
}

std::string PauliString::str() const {
  std::string s(static_cast<size_t>(qubits_), 'I');
  for (int k = 0; k < qubits_; ++k) s[static_cast<size_t>(k)] = label(k);
  return s;
}

Matrix single_pauli(char label) {
  Matrix m(2, 2);
  switch (label) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("invalid Pauli label");
  }
  return m;
}

Matrix PauliString::matrix() const {
  Matrix out = single_pauli(label(0));
  for (int k = 1; k < qubits_; ++k) out = kron(out, single_pauli(label(k)));
  return out;
}

bool operator<(const PauliString& a, const PauliString& b) {
  if (a.qubits_ != b.qubits_) return a.qubits_ < b.qubits_;
  for (int k = 0; k < a.qubits_; ++k) {
    const int ra = label_rank(a.label(k)), rb = label_rank(b.label(k));
    if (ra != rb) return ra < rb;
  }
  return false;
}

bool commutes(const PauliString& a, const PauliString& b) {
  if (a.qubits() != b.qubits())
    throw std::invalid_argument("commutes: length mismatch");
  // Symplectic form <a,b> = |x_a & z_b| + |z_a & x_b| mod 2.
  const int sign = std::popcount(a.x_bits() & b.z_bits()) +
                   std::popcount(a.z_bits() & b.x_bits());
  return (sign % 2) == 0;
}

PauliString pauli_product(const PauliString& a, const PauliString& b) {
  if (a.qubits() != b.qubits())
    throw std::invalid_argument("pauli_product: length mismatch");
  return PauliString::from_bits(a.x_bits() ^ b.x_bits(), a.z_bits() ^ b.z_bits(),
                                a.qubits());
}

std::vector<PauliString> pauli_basis(int qubits) {
  if (qubits < 1 || qubits > 8)
    throw std::invalid_argument("pauli_basis supports 1..8 qubits");
  const int count = 1 << (2 * qubits);
  std::vector<PauliString> out;
  out.reserve(static_cast<size_t>(count));
  std::string labels(static_cast<size_t>(qubits), 'I');
  for (int idx = 0; idx < count; ++idx) {
    for (int k = 0; k < qubits; ++k) {
      const int digit = (idx >> (2 * (qubits - 1 - k))) & 3;
      labels[static_cast<size_t>(k)] = "IXYZ"[digit];
    }
    out.emplace_back(labels);
  }
  return out;
}

int pauli_index(const PauliString& p) {
  int idx = 0;
  for (int k = 0; k < p.qubits(); ++k)
    idx = idx * 4 + label_rank(p.label(k));
  return idx;
}

}  // namespace qpt
