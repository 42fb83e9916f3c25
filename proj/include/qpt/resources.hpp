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
#include <iosfwd>
#include <string>
#include <vector>

#include "qpt/plan.hpp"

namespace qpt {

using WideInt = unsigned __int128;
std::string to_string_wide(WideInt v);

// One scheme row of the resource comparison: configuration, outcome, ancilla
// and gate accounting plus the shot-repetition factor for a target precision.
struct ResourceRow {
  Scheme scheme;
  int n;
  std::int64_t inputs;
  std::int64_t settings_per_input;
  std::int64_t distinct_devices;  // physically distinct settings (= settings
                                  // except 3^n / 3^(2n) for SQPT / AAPT-sep)
  std::int64_t configurations;    // inputs * settings_per_input
  int outcome_exponent_k;         // outcomes per config = 2^(k n)
  std::int64_t outcomes;
  int ancillas;
  std::int64_t gates_per_config;
  std::int64_t total_operations;                // configurations * gates
  std::int64_t repetitions_per_config;          // 2^(k n) / eps^2
  WideInt grand_total_operations;               // configs * gates * repetitions
};

// N' = 2^(k n) / eps^2, equivalently 2^((k-1) n) * (2^n / eps^2).
std::int64_t repetitions_for_precision(int k, int n, double epsilon);

ResourceRow resource_row(Scheme scheme, int n, GateModel model, double epsilon);

// Rows for n in [n_min, n_max], five schemes per n in fixed order.
std::vector<ResourceRow> comparison_table(int n_min, int n_max, GateModel model,
                                          double epsilon);

// Header: scheme,n,inputs,settings,configurations,k,outcomes,ancillas,
// gates_per_config,total_ops,repetitions,grand_total
void write_resource_csv(const std::vector<ResourceRow>& rows, std::ostream& out);
std::vector<ResourceRow> parse_resource_csv(std::istream& in);

// Human-readable table; includes the distinct-device column the CSV omits.
void write_resource_text(const std::vector<ResourceRow>& rows, std::ostream& out);

}  // namespace qpt
