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

#include "qpt/resources.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qpt/errors.hpp"

namespace qpt {

namespace {

constexpr int kMaxResourceN = 8;  // keeps every count exact in 64-bit/double

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void check_args(int n, double epsilon) {
  if (n < 1 || n > kMaxResourceN)
    throw std::invalid_argument("resource accounting supports n in [1, 8]");
  if (!(epsilon > 0.0))
    throw std::invalid_argument("epsilon must be > 0");
}

}  // namespace

std::string to_string_wide(WideInt v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out += static_cast<char>('0' + static_cast<int>(v % 10));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::int64_t repetitions_for_precision(int k, int n, double epsilon) {
  if (k < 1 || !(epsilon > 0.0) || n < 1)
    throw std::invalid_argument("repetitions_for_precision: bad arguments");
  return std::llround(std::ldexp(1.0, k * n) / (epsilon * epsilon));
}

ResourceRow resource_row(Scheme scheme, int n, GateModel model, double epsilon) {
  check_args(n, epsilon);
  ResourceRow row{};
  row.scheme = scheme;
  row.n = n;
  switch (scheme) {
    case Scheme::Sqpt:
      row.inputs = ipow(4, n);
      row.settings_per_input = ipow(4, n);
      row.distinct_devices = ipow(3, n);
      row.outcome_exponent_k = 1;
      row.ancillas = 0;
      row.gates_per_config = 2 * n;  // unit-cost preparation + measurement
      break;
    case Scheme::AaptSeparable:
      row.inputs = 1;
      row.settings_per_input = ipow(16, n);
      row.distinct_devices = ipow(3, 2 * n);
      row.outcome_exponent_k = 2;
      row.ancillas = n;
      row.gates_per_config = 2 * n;
      break;
    case Scheme::AaptMub:
      row.inputs = 1;
      row.settings_per_input = ipow(4, n) + 1;
      row.distinct_devices = row.settings_per_input;
      row.outcome_exponent_k = 2;
      row.ancillas = n;
      row.gates_per_config = mub_setting_cost(2 * n, model);
      break;
    case Scheme::AaptPovm:
      row.inputs = 1;
      row.settings_per_input = 1;
      row.distinct_devices = 1;
      row.outcome_exponent_k = 4;
      row.ancillas = 3 * n;
      // Exponential class: a general many-body observable on 2n qubits.
      row.gates_per_config = ipow(4, 2 * n);
      break;
    case Scheme::Dcqd:
      row.inputs = ipow(4, n);
      row.settings_per_input = 1;
      row.distinct_devices = 1;
      row.outcome_exponent_k = 2;
      row.ancillas = n;
      row.gates_per_config = bell_measurement_cost(n);
      break;
  }
  row.configurations = row.inputs * row.settings_per_input;
  row.outcomes = std::int64_t{1} << (row.outcome_exponent_k * n);
  row.total_operations = row.configurations * row.gates_per_config;
  row.repetitions_per_config =
      repetitions_for_precision(row.outcome_exponent_k, n, epsilon);
  row.grand_total_operations = static_cast<WideInt>(row.total_operations) *
                               static_cast<WideInt>(row.repetitions_per_config);
  return row;
}

std::vector<ResourceRow> comparison_table(int n_min, int n_max, GateModel model,
                                          double epsilon) {
  std::vector<ResourceRow> rows;
  for (int n = n_min; n <= n_max; ++n)
    for (Scheme s : all_schemes()) rows.push_back(resource_row(s, n, model, epsilon));
  return rows;
}

void write_resource_csv(const std::vector<ResourceRow>& rows, std::ostream& out) {
  out << "scheme,n,inputs,settings,configurations,k,outcomes,ancillas,"
         "gates_per_config,total_ops,repetitions,grand_total\n";
  for (const ResourceRow& r : rows) {
    out << scheme_name(r.scheme) << "," << r.n << "," << r.inputs << ","
        << r.settings_per_input << "," << r.configurations << ","
        << r.outcome_exponent_k << "," << r.outcomes << "," << r.ancillas << ","
        << r.gates_per_config << "," << r.total_operations << ","
        << r.repetitions_per_config << "," << to_string_wide(r.grand_total_operations)
        << "\n";
  }
}

std::vector<ResourceRow> parse_resource_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw FileParseError("empty resource CSV");
  const std::string expected =
      "scheme,n,inputs,settings,configurations,k,outcomes,ancillas,"
      "gates_per_config,total_ops,repetitions,grand_total";
  if (line != expected) throw FileParseError("unexpected resource CSV header");
  std::vector<ResourceRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    auto next = [&]() {
      if (!std::getline(ss, cell, ','))
        throw FileParseError("truncated resource CSV row");
      return cell;
    };
    ResourceRow r{};
    r.scheme = parse_scheme(next());
    r.n = std::stoi(next());
    r.inputs = std::stoll(next());
    r.settings_per_input = std::stoll(next());
    r.configurations = std::stoll(next());
    r.outcome_exponent_k = std::stoi(next());
    r.outcomes = std::stoll(next());
    r.ancillas = std::stoi(next());
    r.gates_per_config = std::stoll(next());
    r.total_operations = std::stoll(next());
    r.repetitions_per_config = std::stoll(next());
    WideInt g = 0;
    for (char c : next()) {
      if (c < '0' || c > '9') throw FileParseError("bad grand_total digit");
      g = g * 10 + static_cast<WideInt>(c - '0');
    }
    r.grand_total_operations = g;
    // Distinct devices are derivable from the scheme formulas.
    switch (r.scheme) {
      case Scheme::Sqpt: r.distinct_devices = ipow(3, r.n); break;
      case Scheme::AaptSeparable: r.distinct_devices = ipow(3, 2 * r.n); break;
      default: r.distinct_devices = r.settings_per_input;
    }
    rows.push_back(r);
  }
  return rows;
}

void write_resource_text(const std::vector<ResourceRow>& rows, std::ostream& out) {
  out << "scheme     n  inputs      settings    devices  configs     k  outcomes"
         "    anc  gates/cfg   total_ops      repetitions    grand_total\n";
  for (const ResourceRow& r : rows) {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "%-9s %2d  %-10lld  %-10lld  %-7lld  %-10lld  %d  %-10lld  %-3d"
                  "  %-10lld  %-12lld   %-13lld  %s\n",
                  scheme_name(r.scheme).c_str(), r.n,
                  static_cast<long long>(r.inputs),
                  static_cast<long long>(r.settings_per_input),
                  static_cast<long long>(r.distinct_devices),
                  static_cast<long long>(r.configurations), r.outcome_exponent_k,
                  static_cast<long long>(r.outcomes), r.ancillas,
                  static_cast<long long>(r.gates_per_config),
                  static_cast<long long>(r.total_operations),
                  static_cast<long long>(r.repetitions_per_config),
                  to_string_wide(r.grand_total_operations).c_str());
    out << buf;
  }
  out << "devices = physically distinct measurement settings; the settings "
         "column keeps the 16^n accounting unit for sqpt/aapt-sep.\n";
}

}  // namespace qpt
