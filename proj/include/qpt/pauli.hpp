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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qpt/linalg.hpp"

namespace qpt {

// Tensor product of single-qubit Pauli labels. Qubit 0 is the leftmost label
// and the most significant tensor factor. Internally a pair of bit masks:
// I=(0,0), X=(1,0), Z=(0,1), Y=(1,1), bit k = qubit k.
class PauliString {
 public:
  explicit PauliString(std::string_view labels);
  static PauliString identity(int qubits);
  static PauliString from_bits(std::uint32_t x, std::uint32_t z, int qubits);

  int qubits() const { return qubits_; }
  char label(int k) const;
  bool is_identity() const { return x_ == 0 && z_ == 0; }
  std::uint32_t x_bits() const { return x_; }
  std::uint32_t z_bits() const { return z_; }

  std::string str() const;
  Matrix matrix() const;

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.qubits_ == b.qubits_ && a.x_ == b.x_ && a.z_ == b.z_;
  }
  // Lexicographic over labels with I < X < Y < Z.
  friend bool operator<(const PauliString& a, const PauliString& b);

 private:
  PauliString(std::uint32_t x, std::uint32_t z, int qubits)
      : x_(x), z_(z), qubits_(qubits) {}
  std::uint32_t x_ = 0;
  std::uint32_t z_ = 0;
  int qubits_ = 0;
};

// Sign-counting rule: even number of positions where both labels are non-I
// and differ. Throws on length mismatch.
bool commutes(const PauliString& a, const PauliString& b);

// a*b up to phase (symplectic XOR).
PauliString pauli_product(const PauliString& a, const PauliString& b);

// All 4^m strings in lexicographic order (I<X<Y<Z per qubit, qubit 0 most
// significant). This order fixes the chi-matrix basis indexing everywhere.
std::vector<PauliString> pauli_basis(int qubits);

// Index of p in pauli_basis(p.qubits()).
int pauli_index(const PauliString& p);

Matrix single_pauli(char label);

}  // namespace qpt
