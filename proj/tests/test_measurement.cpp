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

#include <catch2/catch_amalgamated.hpp>

#include "qpt/errors.hpp"
#include "qpt/measurement.hpp"
#include "support/test_util.hpp"

using namespace qpt;

namespace {

KetVector phi_plus() {
  Vector v(4);
  v << 1 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0);
  return KetVector(v);
}

}  // namespace

TEST_CASE("setting_to_measurement anchors") {
  SECTION("{Z} gives |0><0| and |1><1|") {
    const auto meas =
        setting_to_measurement(MeasurementSetting({PauliString("Z")}), false);
    REQUIRE(meas.projectors().size() == 2);
    Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
    p0(0, 0) = 1;
    p1(1, 1) = 1;
    CHECK(max_abs_diff(meas.projectors()[0], p0) < 1e-12);
    CHECK(max_abs_diff(meas.projectors()[1], p1) < 1e-12);
  }
  SECTION("{ZZ, XX} gives 4 rank-1 Bell projectors") {
    const auto meas = setting_to_measurement(
        MeasurementSetting({PauliString("ZZ"), PauliString("XX")}), false);
    REQUIRE(meas.projectors().size() == 4);
    Matrix sum = Matrix::Zero(4, 4);
    for (const auto& p : meas.projectors()) {
      CHECK(std::abs(p.trace().real() - 1.0) < 1e-12);  // rank 1
      sum += p;
    }
    CHECK(max_abs_diff(sum, Matrix::Identity(4, 4)) < 1e-12);
  }
  SECTION("every full two-qubit setting resolves the identity with rank-1 parts") {
    for (const auto& s : pauli_partition(2)) {
      const auto meas = setting_to_measurement(s, false);
      REQUIRE(meas.projectors().size() == 4);
      Matrix sum = Matrix::Zero(4, 4);
      for (const auto& p : meas.projectors()) {
        CHECK(std::abs(p.trace().real() - 1.0) < 1e-12);
        sum += p;
      }
      CHECK(max_abs_diff(sum, Matrix::Identity(4, 4)) < 1e-12);
    }
  }
}

TEST_CASE("bell_measurement anchors") {
  SECTION("n=1: projector 0 is |Phi+><Phi+| and Phi+ gives (1,0,0,0)") {
    const auto meas = bell_measurement(1);
    const KetVector phi = phi_plus();
    CHECK(max_abs_diff(meas.projectors()[0],
                       phi.amplitudes() * phi.amplitudes().adjoint()) < 1e-12);
    const auto dist = outcome_probabilities(meas, DensityMatrix::pure(phi));
    CHECK(dist.probabilities[0] == Catch::Approx(1.0).margin(1e-12));
    for (int o = 1; o < 4; ++o)
      CHECK(dist.probabilities[static_cast<size_t>(o)] ==
            Catch::Approx(0.0).margin(1e-12));
  }
  SECTION("n=2: 16 rank-1 projectors summing to the identity") {
    const auto meas = bell_measurement(2);
    REQUIRE(meas.projectors().size() == 16);
    Matrix sum = Matrix::Zero(16, 16);
    for (const auto& p : meas.projectors()) {
      CHECK(std::abs(p.trace().real() - 1.0) < 1e-12);
      sum += p;
    }
    CHECK(max_abs_diff(sum, Matrix::Identity(16, 16)) < 1e-12);
  }
  SECTION("n=3 exceeds the size cap") {
    CHECK_THROWS_AS(bell_measurement(3), SizeLimitError);
  }
}

TEST_CASE("bell_measurement equals the {Z_i Z_(i+n), X_i X_(i+n)} eigenprojectors") {
  for (int n : {1, 2}) {
    const auto bell = bell_measurement(n);
    std::vector<PauliString> gens;
    const int m = 2 * n;
    for (int i = 0; i < n; ++i) {
      std::string z(static_cast<size_t>(m), 'I'), x(static_cast<size_t>(m), 'I');
      z[static_cast<size_t>(i)] = 'Z';
      z[static_cast<size_t>(i + n)] = 'Z';
      x[static_cast<size_t>(i)] = 'X';
      x[static_cast<size_t>(i + n)] = 'X';
      gens.emplace_back(z);
      gens.emplace_back(x);
    }
    const auto stab = setting_to_measurement(MeasurementSetting(gens), false);
    REQUIRE(stab.projectors().size() == bell.projectors().size());
    // Same projector set, possibly reordered.
    for (const auto& p : bell.projectors()) {
      bool found = false;
      for (const auto& q : stab.projectors())
        if (max_abs_diff(p, q) < 1e-12) {
          found = true;
          break;
        }
      CHECK(found);
    }
  }
}

TEST_CASE("outcome_probabilities anchors") {
  const auto bell = bell_measurement(1, /*include_loss=*/false);

  SECTION("maximally mixed output gives the flat distribution") {
    const DensityMatrix mixed(0.25 * Matrix::Identity(4, 4));
    const auto dist = outcome_probabilities(bell, mixed);
    for (double p : dist.probabilities) CHECK(p == Catch::Approx(0.25).margin(1e-12));
  }
  SECTION("bit flip on the system half of Phi+ moves weight to the X outcome") {
    const QuantumChannel flip = bit_flip(0.25);
    Matrix rho = Matrix::Zero(4, 4);
    const Vector phi = phi_plus().amplitudes();
    for (const Matrix& k : flip.kraus()) {
      const Matrix kk = kron(k, Matrix::Identity(2, 2));
      rho += kk * (phi * phi.adjoint()) * kk.adjoint();
    }
    const auto dist = outcome_probabilities(bell, DensityMatrix(rho));
    // Pullback order: 00 = Phi+, 01 = Psi+ (the X outcome), 10 = Phi-, 11 = Psi-.
    CHECK(dist.probabilities[0] == Catch::Approx(0.75).margin(1e-12));
    CHECK(dist.probabilities[1] == Catch::Approx(0.25).margin(1e-12));
    CHECK(dist.probabilities[2] == Catch::Approx(0.0).margin(1e-12));
    CHECK(dist.probabilities[3] == Catch::Approx(0.0).margin(1e-12));
  }
  SECTION("loss outcome absorbs the trace deficit") {
    const auto meas = setting_to_measurement(MeasurementSetting({PauliString("Z")}),
                                             /*include_loss=*/true);
    Matrix half = Matrix::Zero(2, 2);
    half(0, 0) = 0.6;
    const auto dist = outcome_probabilities(meas, DensityMatrix(half));
    REQUIRE(dist.labels.back() == "loss");
    CHECK(dist.probabilities[0] == Catch::Approx(0.6).margin(1e-12));
    CHECK(dist.probabilities[1] == Catch::Approx(0.0).margin(1e-12));
    CHECK(dist.probabilities[2] == Catch::Approx(0.4).margin(1e-12));
    dist.validate();
  }
}

TEST_CASE("sample_outcomes") {
  OutcomeDistribution dist;
  dist.probabilities = {1.0, 0.0, 0.0, 0.0};
  dist.labels = {"a", "b", "c", "d"};

  SECTION("deterministic distribution fills one bin") {
    const auto counts = sample_outcomes(dist, 100, 7);
    CHECK(counts.counts == std::vector<std::int64_t>{100, 0, 0, 0});
  }
  SECTION("same seed twice gives identical counts") {
    dist.probabilities = {0.4, 0.3, 0.2, 0.1};
    const auto a = sample_outcomes(dist, 10000, 123);
    const auto b = sample_outcomes(dist, 10000, 123);
    CHECK(a.counts == b.counts);
    a.validate();
  }
  SECTION("flat distribution at N = 1e6 is within 0.25 +- 0.005") {
    dist.probabilities = {0.25, 0.25, 0.25, 0.25};
    const auto s = sample_outcomes(dist, 1000000, 99);
    for (std::int64_t c : s.counts)
      CHECK(std::abs(static_cast<double>(c) / 1e6 - 0.25) < 0.005);
  }
  SECTION("sampling is unbiased over 200 seeds at N = 1e4") {
    dist.probabilities = {0.55, 0.25, 0.15, 0.05};
    const int runs = 200;
    const std::int64_t shots = 10000;
    std::vector<double> mean(4, 0.0);
    for (int r = 0; r < runs; ++r) {
      const auto s = sample_outcomes(dist, shots, 1000 + static_cast<std::uint64_t>(r));
      for (size_t o = 0; o < 4; ++o)
        mean[o] += static_cast<double>(s.counts[o]) / static_cast<double>(shots) / runs;
    }
    for (size_t o = 0; o < 4; ++o) {
      const double p = dist.probabilities[o];
      const double se = std::sqrt(p * (1 - p) / (static_cast<double>(shots) * runs));
      CHECK(std::abs(mean[o] - p) < 5.0 * se);
    }
  }
}

TEST_CASE("povm validation and completeness flag") {
  // Trivial two-effect POVM: complete as a measurement, not IC.
  Matrix e0 = Matrix::Zero(2, 2), e1 = Matrix::Zero(2, 2);
  e0(0, 0) = 1;
  e1(1, 1) = 1;
  const PovmMeasurement basic({e0, e1}, {"0", "1"});
  CHECK_FALSE(basic.informationally_complete());
  CHECK_THROWS_AS(PovmMeasurement({e0, e0}, {"a", "b"}), std::invalid_argument);
}

TEST_CASE("measurement costs") {
  SECTION("anchors") {
    CHECK(bell_measurement_cost(1) == 2);            // 1 CNOT + 1 Hadamard
    CHECK(mub_setting_cost(2, GateModel::NonlocalTwoBody) == 4);  // (2n)^2, n=1
    CHECK(pauli_measurement_cost(PauliString("ZZZZ")) == 4);      // CNOTs only
    CHECK(pauli_measurement_cost(PauliString("XZYI")) == 6);      // 4 + 2 changes
    CHECK(mub_setting_cost(2, GateModel::LocalTwoBody) == 8);     // (2n)^2 * 2n
  }
  SECTION("monotone in n") {
    for (int n = 1; n < 8; ++n) {
      CHECK(bell_measurement_cost(n + 1) > bell_measurement_cost(n));
      CHECK(mub_setting_cost(2 * (n + 1), GateModel::NonlocalTwoBody) >
            mub_setting_cost(2 * n, GateModel::NonlocalTwoBody));
      CHECK(mub_setting_cost(2 * (n + 1), GateModel::LocalTwoBody) >
            mub_setting_cost(2 * n, GateModel::LocalTwoBody));
    }
  }
}
