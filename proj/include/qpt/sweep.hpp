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

#include "qpt/reconstruct.hpp"

namespace qpt {

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// Per-chi-parameter sample standard deviation over repeated sampled
// reconstructions at a fixed shot count.
std::vector<double> repeated_reconstruction_std(const ExperimentPlan& plan,
                                                const QuantumChannel& channel,
                                                const Reconstructor& solver,
                                                std::int64_t shots, int trials,
                                                std::uint64_t seed);

struct SweepPoint {
  std::int64_t shots;
  std::vector<double> per_element_std;
  double aggregate_std;  // RMS over chi parameters
};

struct SweepResult {
  std::vector<SweepPoint> points;
  double slope;         // d log(aggregate) / d log(N)
  double slope_stderr;
  int trials;
};

// Requires >= 4 shot counts spanning >= 2 decades and >= 20 trials.
SweepResult precision_sweep(const ExperimentPlan& plan,
                            const QuantumChannel& channel,
                            std::vector<std::int64_t> shots_list, int trials,
                            std::uint64_t seed);

}  // namespace qpt
