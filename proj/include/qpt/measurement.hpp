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
#include <optional>
#include <string>
#include <vector>

#include "qpt/mub.hpp"
#include "qpt/state.hpp"

namespace qpt {

// Orthogonal projector family, optionally extended by a loss outcome carrying
// 1 - sum(p). The loss outcome keeps distributions normalized when the
// measured state has a trace deficit.
class ProjectiveMeasurement {
 public:
  ProjectiveMeasurement(std::vector<Matrix> projectors,
                        std::vector<std::string> labels, bool include_loss);
  const std::vector<Matrix>& projectors() const { return projectors_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool include_loss() const { return include_loss_; }
  Eigen::Index dim() const { return projectors_.front().rows(); }
  int physical_outcomes() const { return static_cast<int>(projectors_.size()); }

 private:
  std::vector<Matrix> projectors_;
  std::vector<std::string> labels_;
  bool include_loss_;
};

// General effect family summing to the identity.
class PovmMeasurement {
 public:
  PovmMeasurement(std::vector<Matrix> effects, std::vector<std::string> labels,
                  bool include_loss = true);
  const std::vector<Matrix>& effects() const { return effects_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool include_loss() const { return include_loss_; }
  Eigen::Index dim() const { return effects_.front().rows(); }
  int physical_outcomes() const { return static_cast<int>(effects_.size()); }
  // True when the effects span the full d^2-dimensional Hermitian space.
  bool informationally_complete() const;

 private:
  std::vector<Matrix> effects_;
  std::vector<std::string> labels_;
  bool include_loss_;
};

struct OutcomeDistribution {
  std::vector<double> probabilities;  // sums to 1 (loss outcome included)
  std::vector<std::string> labels;
  std::vector<std::int64_t> counts;  // empty in exact mode
  std::int64_t shots = 0;

  void validate() const;
};

ProjectiveMeasurement setting_to_measurement(const MeasurementSetting& s,
                                             bool include_loss);

// 2^(2n) rank-1 projectors onto n-fold Bell products, ordered as the pullback
// of the computational basis through CNOT(i, i+n) then H(i). 2n <= 4.
ProjectiveMeasurement bell_measurement(int n, bool include_loss = false);

OutcomeDistribution outcome_probabilities(const ProjectiveMeasurement& meas,
                                          const DensityMatrix& rho);
OutcomeDistribution outcome_probabilities(const PovmMeasurement& meas,
                                          const DensityMatrix& rho);

// Multinomial draw with std::mt19937_64(seed); deterministic per seed.
OutcomeDistribution sample_outcomes(const OutcomeDistribution& dist,
                                    std::int64_t shots, std::uint64_t seed);

enum class GateModel { NonlocalTwoBody, LocalTwoBody };

// One Pauli-string measurement: one CNOT per qubit plus one basis change per
// non-Z non-I label.
std::int64_t pauli_measurement_cost(const PauliString& p);
// Full commuting setting of `total_qubits` operators: (2n)^2 two-body gates,
// times a 2n transport factor when only nearest-neighbor gates exist.
std::int64_t mub_setting_cost(int total_qubits, GateModel model);
// n CNOTs + n Hadamards.
std::int64_t bell_measurement_cost(int n);

}  // namespace qpt
