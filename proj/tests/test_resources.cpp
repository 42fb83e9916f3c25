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
#include <sstream>

#include "qpt/resources.hpp"

using namespace qpt;

namespace {
constexpr GateModel kNonlocal = GateModel::NonlocalTwoBody;
constexpr GateModel kLocal = GateModel::LocalTwoBody;
}  // namespace

TEST_CASE("repetition counts") {
  CHECK(repetitions_for_precision(1, 1, 0.1) == 200);
  CHECK(repetitions_for_precision(2, 1, 0.1) == 400);

  SECTION("identity N' = 2^(kn)/eps^2 = 2^((k-1)n) * (2^n/eps^2), exactly") {
    for (int k : {1, 2, 4})
      for (int n = 1; n <= 8; ++n)
        for (double eps : {0.1, 0.05, 0.01}) {
          const std::int64_t direct = repetitions_for_precision(k, n, eps);
          const std::int64_t via_sqpt =
              (std::int64_t{1} << ((k - 1) * n)) * repetitions_for_precision(1, n, eps);
          CHECK(direct == via_sqpt);
        }
  }
  SECTION("ratio N'(k)/N'(1) = 2^((k-1)n), exactly") {
    for (int k : {1, 2, 4})
      for (int n = 1; n <= 8; ++n)
        for (double eps : {0.1, 0.05, 0.01}) {
          const std::int64_t num = repetitions_for_precision(k, n, eps);
          const std::int64_t den = repetitions_for_precision(1, n, eps);
          CHECK(num % den == 0);
          CHECK(num / den == (std::int64_t{1} << ((k - 1) * n)));
        }
  }
}

TEST_CASE("resource row anchors") {
  SECTION("DCQD configurations 64 and 256 at n = 3, 4") {
    CHECK(resource_row(Scheme::Dcqd, 3, kNonlocal, 0.1).configurations == 64);
    CHECK(resource_row(Scheme::Dcqd, 4, kNonlocal, 0.1).configurations == 256);
  }
  SECTION("AAPT-MUB at n = 1: 5 configs, 4 gates nonlocal, 8 local") {
    const ResourceRow row = resource_row(Scheme::AaptMub, 1, kNonlocal, 0.1);
    CHECK(row.configurations == 5);
    CHECK(row.gates_per_config == 4);
    CHECK(resource_row(Scheme::AaptMub, 1, kLocal, 0.1).gates_per_config == 8);
  }
  SECTION("AAPT-POVM at n = 1: 3 ancillas, 16 outcomes, one config") {
    const ResourceRow row = resource_row(Scheme::AaptPovm, 1, kNonlocal, 0.1);
    CHECK(row.ancillas == 3);
    CHECK(row.outcomes == 16);
    CHECK(row.configurations == 1);
  }
  SECTION("n = 1 configurations column") {
    CHECK(resource_row(Scheme::Sqpt, 1, kNonlocal, 0.1).configurations == 16);
    CHECK(resource_row(Scheme::AaptSeparable, 1, kNonlocal, 0.1).configurations == 16);
    CHECK(resource_row(Scheme::AaptMub, 1, kNonlocal, 0.1).configurations == 5);
    CHECK(resource_row(Scheme::AaptPovm, 1, kNonlocal, 0.1).configurations == 1);
    CHECK(resource_row(Scheme::Dcqd, 1, kNonlocal, 0.1).configurations == 4);
  }
  SECTION("n = 3 ordering: DCQD 64 < AAPT-MUB 65 < SQPT 4096") {
    const auto rows = comparison_table(3, 3, kNonlocal, 0.1);
    std::int64_t dcqd = 0, mub = 0, sqpt = 0;
    for (const auto& r : rows) {
      if (r.scheme == Scheme::Dcqd) dcqd = r.configurations;
      if (r.scheme == Scheme::AaptMub) mub = r.configurations;
      if (r.scheme == Scheme::Sqpt) sqpt = r.configurations;
    }
    CHECK(dcqd == 64);
    CHECK(mub == 65);
    CHECK(sqpt == 4096);
    CHECK(dcqd < mub);
    CHECK(mub < sqpt);
  }
  SECTION("distinct devices for the separable schemes") {
    CHECK(resource_row(Scheme::Sqpt, 2, kNonlocal, 0.1).distinct_devices == 9);
    CHECK(resource_row(Scheme::AaptSeparable, 1, kNonlocal, 0.1).distinct_devices == 9);
    CHECK(resource_row(Scheme::AaptSeparable, 2, kNonlocal, 0.1).distinct_devices == 81);
  }
}

TEST_CASE("configuration ordering invariants for all n") {
  for (int n = 1; n <= 8; ++n) {
    const std::int64_t dcqd = resource_row(Scheme::Dcqd, n, kNonlocal, 0.1).configurations;
    const std::int64_t mub = resource_row(Scheme::AaptMub, n, kNonlocal, 0.1).configurations;
    const std::int64_t sep =
        resource_row(Scheme::AaptSeparable, n, kNonlocal, 0.1).configurations;
    const std::int64_t sqpt = resource_row(Scheme::Sqpt, n, kNonlocal, 0.1).configurations;
    CHECK(dcqd < mub);
    CHECK(mub < sep);
    CHECK(sep == sqpt);
  }
}

TEST_CASE("DCQD minimizes configurations (among configs > 1) and grand totals") {
  for (int n = 1; n <= 8; ++n)
    for (double eps : {0.1, 0.05, 0.01})
      for (GateModel model : {kNonlocal, kLocal}) {
        const auto rows = comparison_table(n, n, model, eps);
        WideInt dcqd_total = 0;
        std::int64_t dcqd_configs = 0;
        for (const auto& r : rows)
          if (r.scheme == Scheme::Dcqd) {
            dcqd_total = r.grand_total_operations;
            dcqd_configs = r.configurations;
          }
        for (const auto& r : rows) {
          CHECK(dcqd_total <= r.grand_total_operations);
          if (r.configurations > 1) CHECK(dcqd_configs <= r.configurations);
        }
      }
}

TEST_CASE("gate-cost columns") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(resource_row(Scheme::Dcqd, n, kNonlocal, 0.1).gates_per_config == 2 * n);
    CHECK(resource_row(Scheme::Sqpt, n, kNonlocal, 0.1).gates_per_config == 2 * n);
    CHECK(resource_row(Scheme::AaptMub, n, kNonlocal, 0.1).gates_per_config ==
          4 * n * n);
    CHECK(resource_row(Scheme::AaptMub, n, kLocal, 0.1).gates_per_config ==
          8 * n * n * n);
    CHECK(resource_row(Scheme::AaptPovm, n, kNonlocal, 0.1).gates_per_config ==
          std::int64_t{1} << (4 * n));
  }
}

TEST_CASE("resource CSV emits the fixed header and parses back losslessly") {
  const auto rows = comparison_table(1, 4, kLocal, 0.05);
  std::stringstream ss;
  write_resource_csv(rows, ss);
  std::string header;
  std::getline(ss, header);
  CHECK(header ==
        "scheme,n,inputs,settings,configurations,k,outcomes,ancillas,"
        "gates_per_config,total_ops,repetitions,grand_total");
  ss.seekg(0);
  const auto back = parse_resource_csv(ss);
  REQUIRE(back.size() == rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].scheme == rows[i].scheme);
    CHECK(back[i].n == rows[i].n);
    CHECK(back[i].inputs == rows[i].inputs);
    CHECK(back[i].settings_per_input == rows[i].settings_per_input);
    CHECK(back[i].distinct_devices == rows[i].distinct_devices);
    CHECK(back[i].configurations == rows[i].configurations);
    CHECK(back[i].outcome_exponent_k == rows[i].outcome_exponent_k);
    CHECK(back[i].outcomes == rows[i].outcomes);
    CHECK(back[i].ancillas == rows[i].ancillas);
    CHECK(back[i].gates_per_config == rows[i].gates_per_config);
    CHECK(back[i].total_operations == rows[i].total_operations);
    CHECK(back[i].repetitions_per_config == rows[i].repetitions_per_config);
    CHECK(back[i].grand_total_operations == rows[i].grand_total_operations);
  }
}

TEST_CASE("wide integer formatting") {
  CHECK(to_string_wide(0) == "0");
  CHECK(to_string_wide(65536) == "65536");
  WideInt big = 1;
  for (int i = 0; i < 5; ++i) big *= 1000000;  // 10^30
  CHECK(to_string_wide(big) == "1000000000000000000000000000000");
}

TEST_CASE("resource argument validation") {
  CHECK_THROWS_AS(resource_row(Scheme::Dcqd, 0, kNonlocal, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(resource_row(Scheme::Dcqd, 9, kNonlocal, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(resource_row(Scheme::Dcqd, 1, kNonlocal, 0.0),
                  std::invalid_argument);
}
