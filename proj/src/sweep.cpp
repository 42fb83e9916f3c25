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

#include "qpt/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qpt {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(base ^ splitmix64(index + 1));
}

std::vector<double> repeated_reconstruction_std(const ExperimentPlan& plan,
                                                const QuantumChannel& channel,
                                                const Reconstructor& solver,
                                                std::int64_t shots, int trials,
                                                std::uint64_t seed) {
  if (trials < 2) throw std::invalid_argument("need at least 2 trials");
  const auto params = static_cast<size_t>(solver.design().entries.cols());
  std::vector<double> mean(params, 0.0), m2(params, 0.0);
  for (int t = 0; t < trials; ++t) {
    const auto dists = simulate_experiment(plan, channel, shots,
                                           derive_seed(seed, static_cast<std::uint64_t>(t)));
    const ChiEstimate est = solver.reconstruct(stack_frequencies(plan, dists));
    const RealVector x = pack_chi(est.chi);
    // Welford accumulation.
    for (size_t q = 0; q < params; ++q) {
      const double delta = x(static_cast<Eigen::Index>(q)) - mean[q];
      mean[q] += delta / static_cast<double>(t + 1);
      m2[q] += delta * (x(static_cast<Eigen::Index>(q)) - mean[q]);
    }
  }
  std::vector<double> stds(params);
  for (size_t q = 0; q < params; ++q)
    stds[q] = std::sqrt(m2[q] / static_cast<double>(trials - 1));
  return stds;
}

SweepResult precision_sweep(const ExperimentPlan& plan,
                            const QuantumChannel& channel,
                            std::vector<std::int64_t> shots_list, int trials,
                            std::uint64_t seed) {
  std::sort(shots_list.begin(), shots_list.end());
  if (shots_list.size() < 4)
    throw std::invalid_argument("sweep needs at least 4 shot counts");
  if (shots_list.front() < 1)
    throw std::invalid_argument("shot counts must be >= 1");
  if (shots_list.back() < 100 * shots_list.front())
    throw std::invalid_argument("sweep shot counts must span at least 2 decades");
  if (trials < 20) throw std::invalid_argument("sweep needs at least 20 trials");

  const Reconstructor solver(build_design_matrix(plan));
  SweepResult result;
  result.trials = trials;
  for (size_t i = 0; i < shots_list.size(); ++i) {
    SweepPoint point;
    point.shots = shots_list[i];
    point.per_element_std = repeated_reconstruction_std(
        plan, channel, solver, point.shots, trials,
        derive_seed(seed, 0x5157ULL + static_cast<std::uint64_t>(i)));
    double sum2 = 0.0;
    for (double s : point.per_element_std) sum2 += s * s;
    point.aggregate_std = std::sqrt(sum2 / static_cast<double>(point.per_element_std.size()));
    result.points.push_back(std::move(point));
  }

  // OLS fit of log(aggregate) against log(N).
  const auto pts = static_cast<double>(result.points.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const SweepPoint& p : result.points) {
    const double x = std::log(static_cast<double>(p.shots));
    const double y = std::log(p.aggregate_std);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const double denom = sxx - sx * sx / pts;
  result.slope = (sxy - sx * sy / pts) / denom;
  const double intercept = (sy - result.slope * sx) / pts;
  double ss_res = 0.0;
  for (const SweepPoint& p : result.points) {
    const double x = std::log(static_cast<double>(p.shots));
    const double r = std::log(p.aggregate_std) - (intercept + result.slope * x);
    ss_res += r * r;
  }
  result.slope_stderr =
      pts > 2 ? std::sqrt(ss_res / (pts - 2.0) / denom) : 0.0;
  return result;
}

}  // namespace qpt
