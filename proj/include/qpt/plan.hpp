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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qpt/channel.hpp"
#include "qpt/measurement.hpp"

namespace qpt {

enum class Scheme { Sqpt, AaptSeparable, AaptMub, AaptPovm, Dcqd };

std::string scheme_name(Scheme s);           // sqpt, aapt-sep, ...
Scheme parse_scheme(const std::string& name);
const std::vector<Scheme>& all_schemes();

// Measurement slot of a config. Matrices are materialized only within the
// 4-qubit exact-simulation cap; larger plans keep the description and labels
// for dumps and counting.
struct ConfigMeasurement {
  std::string description;
  std::vector<std::string> outcome_labels;  // physical outcomes, loss excluded
  std::shared_ptr<const ProjectiveMeasurement> projective;
  std::shared_ptr<const PovmMeasurement> povm;

  bool materialized() const { return projective != nullptr || povm != nullptr; }
  int physical_outcomes() const { return static_cast<int>(outcome_labels.size()); }
};

struct Config {
  std::string label;
  KetVector input;  // on n + simulated-ancilla qubits
  ConfigMeasurement measurement;
};

struct ExperimentPlan {
  Scheme scheme;
  int n = 0;                   // system qubits
  int ancilla_count = 0;       // as accounted (3n for the POVM scheme)
  int simulated_ancillas = 0;  // ancillas carried by the simulation
  std::vector<Config> configs;
  bool simulable = false;

  int simulated_qubits() const { return n + simulated_ancillas; }
};

// Config counts: SQPT 16^n, AAPT-sep 3^(2n) distinct devices, AAPT-MUB 4^n+1,
// AAPT-POVM 1 (n = 1 only), DCQD 4^n. Plans are simulable for n + ancillas
// <= 4 qubits; n <= 4 otherwise yields a structural (count/dump) plan.
ExperimentPlan build_plan(Scheme scheme, int n);

// The four single-qubit DCQD configs: the population config reads the chi
// diagonal from Bell probabilities; the three coherence configs place
// sqrt(3)/2|00> + i/2|11> in the Z, X and Y Schmidt frames, all measured in
// the joint {ZZ,XX} eigenbasis with outcomes ordered (I, X, Y, Z).
std::vector<Config> dcqd_configs();

// DCQD plan with every coherence input replaced by one shared product state;
// used for the entanglement-necessity sweeps. The design rank drops below 16.
ExperimentPlan dcqd_with_product_input(const KetVector& product_state);

// 16-outcome informationally complete POVM: tensor square of the single-qubit
// tetrahedron POVM (effects (I + r_i.sigma)/4 over the four tetrahedron axes).
PovmMeasurement tetrahedron_povm();

}  // namespace qpt
