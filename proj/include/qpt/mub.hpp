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

#include <string>
#include <vector>

#include "qpt/pauli.hpp"
#include "qpt/state.hpp"

namespace qpt {

// A set of independent, pairwise-commuting, nontrivial Pauli strings measured
// simultaneously. With g generators on m qubits the common eigenspaces form
// 2^g sectors of rank 2^(m-g) each.
class MeasurementSetting {
 public:
  explicit MeasurementSetting(std::vector<PauliString> generators);
  const std::vector<PauliString>& generators() const { return generators_; }
  int qubit_count() const { return qubit_count_; }
  int generator_count() const { return static_cast<int>(generators_.size()); }
  bool full() const { return generator_count() == qubit_count_; }
  std::string str() const;  // comma-separated generator strings

 private:
  std::vector<PauliString> generators_;
  int qubit_count_;
};

// All 2^g - 1 nontrivial products of the generators (up to phase), sorted.
std::vector<PauliString> setting_elements(const MeasurementSetting& s);

// Joint eigenbasis with one column per outcome. Outcome o encodes the sign of
// generator i in bit (g-1-i): bit clear = +1. Labels are "+"/"-" strings.
// Phase convention: first amplitude above 1e-9 is real positive.
struct LabeledBasis {
  Matrix vectors;                   // columns, 2^m of them
  std::vector<std::string> labels;  // sign pattern per column
};
LabeledBasis common_eigenbasis(const MeasurementSetting& s);

// Partition of the 4^m - 1 nontrivial m-qubit strings into 2^m + 1 maximal
// commuting classes, built from GF(2^m): class c = {(x, c*x)} plus the pure-Z
// class, with z-parts written in the trace-dual basis so field isotropy turns
// into the Pauli commutation form. Deterministic; classes ordered by their
// lexicographically smallest element. Supports m in [1, 8].
std::vector<MeasurementSetting> pauli_partition(int m);

struct MubFamily {
  std::vector<LabeledBasis> bases;
  std::vector<MeasurementSetting> settings;
};

// The five-row two-qubit family; settings partition the 15 nontrivial strings
// into commuting triples, rows 1-3 pair each system-local operator with the
// matching ancilla-local one.
MubFamily two_qubit_mub();

// Largest deviation of any cross-basis |<a|b>|^2 from 1/2^m.
double max_unbiasedness_deviation(const MubFamily& family);

}  // namespace qpt
