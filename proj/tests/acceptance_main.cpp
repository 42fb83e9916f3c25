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

// Acceptance suite: one line per criterion, [PASS]/[FAIL], nonzero exit on
// any failure. Tolerances are pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "qpt/channel.hpp"
#include "qpt/mub.hpp"
#include "qpt/reconstruct.hpp"
#include "qpt/resources.hpp"
#include "qpt/sweep.hpp"

using namespace qpt;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name,
               const std::function<bool(std::string&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::printf("[%s] %d. %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number,
              name.c_str(), seconds, detail.empty() ? "" : " -- ",
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

QuantumChannel random_channel(std::uint64_t seed, double max_deficit) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.0, max_deficit);
  std::vector<Matrix> gs;
  for (int i = 0; i < 3; ++i) {
    Matrix g(2, 2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) g(r, c) = Complex(normal(rng), normal(rng));
    gs.push_back(std::move(g));
  }
  Matrix s = Matrix::Zero(2, 2);
  for (const Matrix& g : gs) s += g.adjoint() * g;
  Eigen::SelfAdjointEigenSolver<Matrix> es(s);
  const Matrix inv_sqrt = es.eigenvectors() *
                          es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                          es.eigenvectors().adjoint();
  const double scale = std::sqrt(1.0 - uniform(rng));
  std::vector<Matrix> kraus;
  for (const Matrix& g : gs) kraus.push_back(scale * (g * inv_sqrt));
  return QuantumChannel(std::move(kraus), 1);
}

KetVector random_product_state(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector a(2), b(2);
  for (int i = 0; i < 2; ++i) {
    a(i) = Complex(normal(rng), normal(rng));
    b(i) = Complex(normal(rng), normal(rng));
  }
  a /= a.norm();
  b /= b.norm();
  return KetVector(kron(a, b));
}

double aggregate_rms(const std::vector<double>& stds) {
  double sum2 = 0.0;
  for (double s : stds) sum2 += s * s;
  return std::sqrt(sum2 / static_cast<double>(stds.size()));
}

}  // namespace

int main() {
  criterion(1, "configuration counts: dcqd 4/16/64/256, mub 5, povm 1, sqpt 16^n",
            [](std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    const std::vector<size_t> dcqd_expected = {4, 16, 64, 256};
    for (int n = 1; n <= 4; ++n) {
      ok = ok && build_plan(Scheme::Dcqd, n).configs.size() ==
                     dcqd_expected[static_cast<size_t>(n - 1)];
      ok = ok && resource_row(Scheme::Dcqd, n, GateModel::NonlocalTwoBody, 0.1)
                         .configurations ==
                     static_cast<std::int64_t>(dcqd_expected[static_cast<size_t>(n - 1)]);
    }
    ok = ok && build_plan(Scheme::AaptMub, 1).configs.size() == 5;
    ok = ok && build_plan(Scheme::AaptPovm, 1).configs.size() == 1;
    std::int64_t sixteen = 1;
    for (int n = 1; n <= 4; ++n) {
      sixteen *= 16;
      ok = ok && build_plan(Scheme::Sqpt, n).configs.size() ==
                     static_cast<size_t>(sixteen);
      ok = ok && resource_row(Scheme::Sqpt, n, GateModel::NonlocalTwoBody, 0.1)
                         .configurations == sixteen;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (seconds >= 1.0) {
      detail = "runtime " + std::to_string(seconds) + "s >= 1s";
      return false;
    }
    return ok;
  });

  criterion(2, "two-qubit MUB: 5 bases, |<a|b>|^2 = 0.25 +- 1e-10, exact cover",
            [](std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    const MubFamily family = two_qubit_mub();
    bool ok = family.bases.size() == 5;
    const double deviation = max_unbiasedness_deviation(family);
    ok = ok && deviation < 1e-10;
    std::set<std::string> covered;
    for (const auto& s : family.settings) {
      const auto elements = setting_elements(s);
      ok = ok && elements.size() == 3;
      for (const auto& p : elements) covered.insert(p.str());
    }
    ok = ok && covered.size() == 15;
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    detail = "deviation " + std::to_string(deviation);
    return ok && seconds < 1.0;
  });

  criterion(3, "completeness: rank 16 every scheme; 100 random CP maps within 1e-8",
            [](std::string& detail) {
    bool ok = true;
    std::vector<ExperimentPlan> plans;
    std::vector<Reconstructor> solvers;
    for (Scheme s : all_schemes()) {
      plans.push_back(build_plan(s, 1));
      solvers.emplace_back(build_design_matrix(plans.back()));
      ok = ok && solvers.back().rank() == 16;
    }
    double worst_err = 0.0, worst_pair = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const QuantumChannel ch = random_channel(1000 + trial, 0.5);
      const Matrix truth = kraus_to_chi(ch).entries();
      std::vector<Matrix> estimates;
      for (size_t i = 0; i < plans.size(); ++i) {
        const auto dists = simulate_experiment(plans[i], ch, std::nullopt, 0);
        const ChiEstimate est =
            solvers[i].reconstruct(stack_frequencies(plans[i], dists));
        worst_err = std::max(worst_err, max_abs_diff(est.chi.entries(), truth));
        estimates.push_back(est.chi.entries());
      }
      for (size_t i = 0; i < estimates.size(); ++i)
        for (size_t j = i + 1; j < estimates.size(); ++j)
          worst_pair = std::max(worst_pair, max_abs_diff(estimates[i], estimates[j]));
    }
    detail = "max error " + std::to_string(worst_err) + ", max disagreement " +
             std::to_string(worst_pair);
    return ok && worst_err < 1e-8 && worst_pair < 1e-8;
  });

  criterion(4, "DCQD population read-out equals the chi diagonal within 1e-12",
            [](std::string& detail) {
    const ExperimentPlan plan = build_plan(Scheme::Dcqd, 1);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const QuantumChannel ch = random_channel(5000 + trial, 0.5);
      const Matrix chi = kraus_to_chi(ch).entries();
      const auto dists = simulate_experiment(plan, ch, std::nullopt, 0);
      for (int m = 0; m < 4; ++m)
        worst = std::max(worst,
                         std::abs(dists[0].probabilities[static_cast<size_t>(m)] -
                                  chi(m, m).real()));
    }
    detail = "max deviation " + std::to_string(worst);
    return worst < 1e-12;
  });

  criterion(5, "entanglement necessity: product inputs drop the design rank",
            [](std::string& detail) {
    int counterexamples = 0;
    int worst_rank = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const ExperimentPlan plan =
          dcqd_with_product_input(random_product_state(7000 + trial));
      const int rank = design_rank(build_design_matrix(plan));
      worst_rank = std::max(worst_rank, rank);
      if (rank >= 16) ++counterexamples;
    }
    detail = "max rank " + std::to_string(worst_rank) + ", counterexamples " +
             std::to_string(counterexamples);
    return counterexamples == 0;
  });

  criterion(6, "precision scaling: slope -0.50 +- 0.05; povm/dcqd std ratio 2 +- 30%",
            [](std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    const QuantumChannel ch = depolarizing(0.3);
    const ExperimentPlan dcqd = build_plan(Scheme::Dcqd, 1);
    const SweepResult sweep =
        precision_sweep(dcqd, ch, {1000, 10000, 100000, 1000000}, 50, 2026);
    bool ok = std::abs(sweep.slope + 0.5) <= 0.05;

    const ExperimentPlan povm = build_plan(Scheme::AaptPovm, 1);
    const Reconstructor dcqd_solver(build_design_matrix(dcqd));
    const Reconstructor povm_solver(build_design_matrix(povm));
    const std::int64_t shots = 10000;
    const int trials = 200;
    const double dcqd_std = aggregate_rms(repeated_reconstruction_std(
        dcqd, ch, dcqd_solver, shots, trials, 11));
    const double povm_std = aggregate_rms(repeated_reconstruction_std(
        povm, ch, povm_solver, shots, trials, 12));
    const double ratio = povm_std / dcqd_std;
    ok = ok && ratio >= 2.0 * 0.7 && ratio <= 2.0 * 1.3;
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    detail = "slope " + std::to_string(sweep.slope) + ", ratio " +
             std::to_string(ratio);
    return ok && seconds < 300.0;
  });

  criterion(7, "repetition identities exact over k in {1,2,4}, n in [1,8]",
            [](std::string&) {
    for (int k : {1, 2, 4})
      for (int n = 1; n <= 8; ++n)
        for (double eps : {0.1, 0.05, 0.01}) {
          const std::int64_t reps = repetitions_for_precision(k, n, eps);
          const std::int64_t base = repetitions_for_precision(1, n, eps);
          if (reps != (std::int64_t{1} << ((k - 1) * n)) * base) return false;
          if (reps % base != 0) return false;
          if (reps / base != (std::int64_t{1} << ((k - 1) * n))) return false;
        }
    return repetitions_for_precision(1, 1, 0.1) == 200;
  });

  criterion(8, "gate-cost anchors and DCQD grand-total minimality for n in [1,8]",
            [](std::string&) {
    bool ok = bell_measurement_cost(1) == 2;
    ok = ok && pauli_measurement_cost(PauliString("ZZZZ")) == 4;
    ok = ok && mub_setting_cost(2, GateModel::NonlocalTwoBody) == 4;
    ok = ok && mub_setting_cost(2, GateModel::LocalTwoBody) == 8;
    for (int n = 1; n <= 8 && ok; ++n) {
      ok = resource_row(Scheme::Dcqd, n, GateModel::NonlocalTwoBody, 0.1)
               .gates_per_config == 2 * n;
      std::string zs(static_cast<size_t>(2 * n <= 8 ? 2 * n : 8), 'Z');
      ok = ok && pauli_measurement_cost(PauliString(zs)) ==
                     static_cast<std::int64_t>(zs.size());
      for (double eps : {0.1, 0.05, 0.01})
        for (GateModel model : {GateModel::NonlocalTwoBody, GateModel::LocalTwoBody}) {
          const auto rows = comparison_table(n, n, model, eps);
          WideInt dcqd_total = 0;
          for (const auto& r : rows)
            if (r.scheme == Scheme::Dcqd) dcqd_total = r.grand_total_operations;
          for (const auto& r : rows)
            ok = ok && dcqd_total <= r.grand_total_operations;
        }
    }
    return ok;
  });

  criterion(9, "T1/T2 via DCQD: rates within 1% exact, 5% at N = 1e6",
            [](std::string& detail) {
    const double gamma = 0.2, lambda = 0.3, t = 1.0;
    const QuantumChannel ch = damping_dephasing(gamma, lambda);
    const double t1_want = -t / std::log1p(-gamma);
    const double t2_want = -t / std::log(std::sqrt(1 - gamma) * (1 - 2 * lambda));

    const ExperimentPlan plan = build_plan(Scheme::Dcqd, 1);
    const Reconstructor solver(build_design_matrix(plan));

    const ChiEstimate exact = solver.reconstruct(
        stack_frequencies(plan, simulate_experiment(plan, ch, std::nullopt, 0)));
    const RelaxationEstimate rel = extract_relaxation(exact, t);
    const double exact_err1 = std::abs(1.0 / rel.t1 - 1.0 / t1_want) * t1_want;
    const double exact_err2 = std::abs(1.0 / rel.t2 - 1.0 / t2_want) * t2_want;

    const ChiEstimate sampled = solver.reconstruct(
        stack_frequencies(plan, simulate_experiment(plan, ch, 1000000, 2026)));
    const RelaxationEstimate rel_s = extract_relaxation(sampled, t);
    const double shot_err1 = std::abs(1.0 / rel_s.t1 - 1.0 / t1_want) * t1_want;
    const double shot_err2 = std::abs(1.0 / rel_s.t2 - 1.0 / t2_want) * t2_want;

    detail = "exact rate errors " + std::to_string(exact_err1) + "/" +
             std::to_string(exact_err2) + ", sampled " + std::to_string(shot_err1) +
             "/" + std::to_string(shot_err2);
    return exact_err1 < 0.01 && exact_err2 < 0.01 && shot_err1 < 0.05 &&
           shot_err2 < 0.05;
  });

  if (g_failures == 0)
    std::printf("all 9 acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
