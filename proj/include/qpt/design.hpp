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

#include <iosfwd>
#include <optional>

#include "qpt/plan.hpp"

namespace qpt {

// Real parameterization of a Hermitian chi: the d^2 diagonal entries, then
// (Re, Im) of the strict upper triangle in row-major order; d^4 reals total.
RealVector pack_chi(const ChiMatrix& chi);
ChiMatrix unpack_chi(const RealVector& params, int qubit_count);
std::vector<std::string> chi_parameter_labels(int qubit_count);

// Linear map from packed chi to the stacked physical-outcome probabilities of
// a plan. Loss outcomes are omitted: every measurement here resolves the
// measured space, so the survival functional is already the sum of the
// physical rows.
struct DesignMatrix {
  RealMatrix entries;
  std::vector<std::string> row_labels;
  std::vector<std::string> column_labels;
  int qubit_count = 0;  // system qubits
};

DesignMatrix build_design_matrix(const ExperimentPlan& plan);

// Numerical rank at relative threshold 1e-10.
int design_rank(const DesignMatrix& design);

// Exact mode (shots empty): Born probabilities per config. Sampled mode:
// multinomial frequencies, N shots per config, stream seed ^ config_index.
std::vector<OutcomeDistribution> simulate_experiment(
    const ExperimentPlan& plan, const QuantumChannel& channel,
    std::optional<std::int64_t> shots, std::uint64_t seed);

// Stack distributions into the design's row order (loss entries dropped).
// Sampled distributions contribute counts/N.
RealVector stack_frequencies(const ExperimentPlan& plan,
                             const std::vector<OutcomeDistribution>& dists);

void write_design_csv(const DesignMatrix& design, std::ostream& out);
DesignMatrix read_design_csv(std::istream& in);

}  // namespace qpt
