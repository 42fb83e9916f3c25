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

#include "qpt/design.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qpt/errors.hpp"

namespace qpt {

namespace {

constexpr int kMaxDesignSystemQubits = 2;  // chi has d^4 <= 256 parameters

void require_simulable(const ExperimentPlan& plan) {
  if (!plan.simulable)
    throw SizeLimitError("plan for n = " + std::to_string(plan.n) +
                         " exceeds the 4-qubit exact-simulation cap");
}

std::vector<Matrix> extended_kraus(const QuantumChannel& ch, int ancillas) {
  const Eigen::Index da = Eigen::Index{1} << ancillas;
  std::vector<Matrix> out;
  for (const Matrix& k : ch.kraus())
    out.push_back(ancillas == 0 ? k : kron(k, Matrix::Identity(da, da)));
  return out;
}

// Columns: (sigma_m (x) I)|psi> over the chi basis.
Matrix basis_action(const KetVector& input, int system_qubits) {
  const int anc = input.qubit_count() - system_qubits;
  const Eigen::Index da = Eigen::Index{1} << anc;
  const auto basis = pauli_basis(system_qubits);
  Matrix v(input.dim(), static_cast<Eigen::Index>(basis.size()));
  for (size_t m = 0; m < basis.size(); ++m) {
    Matrix op = basis[m].matrix();
    if (anc > 0) op = kron(op, Matrix::Identity(da, da));
    v.col(static_cast<Eigen::Index>(m)) = op * input.amplitudes();
  }
  return v;
}

const std::vector<Matrix>& config_effects(const Config& config) {
  if (config.measurement.projective) return config.measurement.projective->projectors();
  if (config.measurement.povm) return config.measurement.povm->effects();
  throw SizeLimitError("config measurement is not materialized");
}

}  // namespace

RealVector pack_chi(const ChiMatrix& chi) {
  const Eigen::Index dim2 = chi.basis_dim();
  RealVector out(dim2 * dim2);
  Eigen::Index at = 0;
  for (Eigen::Index q = 0; q < dim2; ++q) out(at++) = chi.entries()(q, q).real();
  for (Eigen::Index q = 0; q < dim2; ++q)
    for (Eigen::Index r = q + 1; r < dim2; ++r) {
      out(at++) = chi.entries()(q, r).real();
      out(at++) = chi.entries()(q, r).imag();
    }
  return out;
}

ChiMatrix unpack_chi(const RealVector& params, int qubit_count) {
  const Eigen::Index dim2 = Eigen::Index{1} << (2 * qubit_count);
  if (params.size() != dim2 * dim2)
    throw std::invalid_argument("parameter vector has wrong length");
  Matrix chi = Matrix::Zero(dim2, dim2);
  Eigen::Index at = 0;
  for (Eigen::Index q = 0; q < dim2; ++q) chi(q, q) = params(at++);
  for (Eigen::Index q = 0; q < dim2; ++q)
    for (Eigen::Index r = q + 1; r < dim2; ++r) {
      const Complex v(params(at), params(at + 1));
      at += 2;
      chi(q, r) = v;
      chi(r, q) = std::conj(v);
    }
  return ChiMatrix(std::move(chi), qubit_count);
}

std::vector<std::string> chi_parameter_labels(int qubit_count) {
  const auto basis = pauli_basis(qubit_count);
  std::vector<std::string> out;
  for (const auto& p : basis) out.push_back("diag(" + p.str() + ")");
  for (size_t q = 0; q < basis.size(); ++q)
    for (size_t r = q + 1; r < basis.size(); ++r) {
      out.push_back("re(" + basis[q].str() + ":" + basis[r].str() + ")");
      out.push_back("im(" + basis[q].str() + ":" + basis[r].str() + ")");
    }
  return out;
}

DesignMatrix build_design_matrix(const ExperimentPlan& plan) {
  require_simulable(plan);
  if (plan.n > kMaxDesignSystemQubits)
    throw SizeLimitError("design matrices support n <= 2 system qubits");
  const Eigen::Index dim2 = Eigen::Index{1} << (2 * plan.n);
  const Eigen::Index params = dim2 * dim2;

  Eigen::Index rows = 0;
  for (const Config& c : plan.configs)
    rows += static_cast<Eigen::Index>(config_effects(c).size());

  DesignMatrix design;
  design.qubit_count = plan.n;
  design.entries = RealMatrix(rows, params);
  design.column_labels = chi_parameter_labels(plan.n);

  Eigen::Index row = 0;
  for (const Config& config : plan.configs) {
    const Matrix v = basis_action(config.input, plan.n);
    const auto& effects = config_effects(config);
    for (size_t o = 0; o < effects.size(); ++o) {
      // g(n, m) = <v_n| F |v_m>; probability = sum chi_mn g(n, m).
      const Matrix g = v.adjoint() * effects[o] * v;
      Eigen::Index at = 0;
      for (Eigen::Index q = 0; q < dim2; ++q)
        design.entries(row, at++) = g(q, q).real();
      for (Eigen::Index q = 0; q < dim2; ++q)
        for (Eigen::Index r = q + 1; r < dim2; ++r) {
          design.entries(row, at++) = 2.0 * g(r, q).real();
          design.entries(row, at++) = -2.0 * g(r, q).imag();
        }
      design.row_labels.push_back(config.label + "::" +
                                  config.measurement.outcome_labels[o]);
      ++row;
    }
  }
  return design;
}

int design_rank(const DesignMatrix& design) {
  Eigen::BDCSVD<RealMatrix> svd(design.entries);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) <= 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > 1e-10 * s(0)) ++rank;
  return rank;
}

std::vector<OutcomeDistribution> simulate_experiment(
    const ExperimentPlan& plan, const QuantumChannel& channel,
    std::optional<std::int64_t> shots, std::uint64_t seed) {
  require_simulable(plan);
  if (channel.qubit_count() != plan.n)
    throw std::invalid_argument("channel acts on " +
                                std::to_string(channel.qubit_count()) +
                                " qubits but the plan has n = " +
                                std::to_string(plan.n));
  const auto kraus = extended_kraus(channel, plan.simulated_ancillas);
  std::vector<OutcomeDistribution> out;
  out.reserve(plan.configs.size());
  for (size_t i = 0; i < plan.configs.size(); ++i) {
    const Config& config = plan.configs[i];
    const Matrix rho_in =
        config.input.amplitudes() * config.input.amplitudes().adjoint();
    Matrix rho_out = Matrix::Zero(rho_in.rows(), rho_in.cols());
    for (const Matrix& k : kraus) rho_out += k * rho_in * k.adjoint();
    const DensityMatrix rho(0.5 * (rho_out + rho_out.adjoint()));
    OutcomeDistribution dist =
        config.measurement.projective
            ? outcome_probabilities(*config.measurement.projective, rho)
            : outcome_probabilities(*config.measurement.povm, rho);
    if (shots)
      dist = sample_outcomes(dist, *shots, seed ^ static_cast<std::uint64_t>(i));
    out.push_back(std::move(dist));
  }
  return out;
}

RealVector stack_frequencies(const ExperimentPlan& plan,
                             const std::vector<OutcomeDistribution>& dists) {
  if (dists.size() != plan.configs.size())
    throw std::invalid_argument("distribution count does not match the plan");
  std::vector<double> values;
  for (size_t i = 0; i < dists.size(); ++i) {
    const auto& dist = dists[i];
    const int physical = plan.configs[i].measurement.physical_outcomes();
    if (static_cast<int>(dist.probabilities.size()) < physical)
      throw std::invalid_argument("distribution is missing outcomes");
    for (int o = 0; o < physical; ++o) {
      if (dist.counts.empty())
        values.push_back(dist.probabilities[static_cast<size_t>(o)]);
      else
        values.push_back(static_cast<double>(dist.counts[static_cast<size_t>(o)]) /
                         static_cast<double>(dist.shots));
    }
  }
  return Eigen::Map<RealVector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

void write_design_csv(const DesignMatrix& design, std::ostream& out) {
  out << "row";
  for (const auto& c : design.column_labels) out << "," << c;
  out << "\n";
  for (Eigen::Index r = 0; r < design.entries.rows(); ++r) {
    out << design.row_labels[static_cast<size_t>(r)];
    for (Eigen::Index c = 0; c < design.entries.cols(); ++c)
      out << "," << format_double(design.entries(r, c));
    out << "\n";
  }
}

DesignMatrix read_design_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FileParseError("empty design CSV");
  DesignMatrix design;
  {
    std::stringstream header(line);
    std::string cell;
    if (!std::getline(header, cell, ',') || cell != "row")
      throw FileParseError("design CSV header must start with 'row'");
    while (std::getline(header, cell, ',')) design.column_labels.push_back(cell);
  }
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::getline(ss, cell, ',');
    design.row_labels.push_back(cell);
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() != design.column_labels.size())
      throw FileParseError("design CSV row width mismatch");
    rows.push_back(std::move(row));
  }
  design.entries = RealMatrix(static_cast<Eigen::Index>(rows.size()),
                              static_cast<Eigen::Index>(design.column_labels.size()));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c)
      design.entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          rows[r][c];
  // Column count fixes the system size: d^4 = (2^2n)^2.
  int n = 0;
  while ((Eigen::Index{1} << (4 * (n + 1))) <= design.entries.cols()) ++n;
  design.qubit_count = n;
  return design;
}

}  // namespace qpt
