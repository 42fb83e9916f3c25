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

#include "qpt/measurement.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qpt/errors.hpp"

namespace qpt {

ProjectiveMeasurement::ProjectiveMeasurement(std::vector<Matrix> projectors,
                                             std::vector<std::string> labels,
                                             bool include_loss)
    : projectors_(std::move(projectors)),
      labels_(std::move(labels)),
      include_loss_(include_loss) {
  if (projectors_.empty()) throw std::invalid_argument("no projectors");
  if (labels_.size() != projectors_.size())
    throw std::invalid_argument("label/projector count mismatch");
  const Eigen::Index d = projectors_.front().rows();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& p : projectors_) {
    if (p.rows() != d || p.cols() != d)
      throw std::invalid_argument("projector dimension mismatch");
    sum += p;
  }
  for (size_t i = 0; i < projectors_.size(); ++i)
    for (size_t j = i + 1; j < projectors_.size(); ++j)
      if ((projectors_[i] * projectors_[j]).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("projectors are not orthogonal");
  if (min_eigenvalue(Matrix::Identity(d, d) - sum) < -1e-10)
    throw std::invalid_argument("projectors exceed the identity");
}

PovmMeasurement::PovmMeasurement(std::vector<Matrix> effects,
                                 std::vector<std::string> labels,
                                 bool include_loss)
    : effects_(std::move(effects)),
      labels_(std::move(labels)),
      include_loss_(include_loss) {
  if (effects_.empty()) throw std::invalid_argument("no effects");
  if (labels_.size() != effects_.size())
    throw std::invalid_argument("label/effect count mismatch");
  const Eigen::Index d = effects_.front().rows();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& f : effects_) {
    if (min_eigenvalue(f) < -1e-10)
      throw std::invalid_argument("POVM effect is not positive semidefinite");
    sum += f;
  }
  if ((sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("POVM effects do not sum to the identity");
}

bool PovmMeasurement::informationally_complete() const {
  const Eigen::Index d = dim();
  // Real-vectorize each Hermitian effect and rank-check.
  RealMatrix v(static_cast<Eigen::Index>(effects_.size()), d * d);
  for (size_t i = 0; i < effects_.size(); ++i) {
    Eigen::Index col = 0;
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index c = 0; c < d; ++c) {
        v(static_cast<Eigen::Index>(i), col++) =
            (r <= c) ? effects_[i](r, c).real() : effects_[i](r, c).imag();
      }
  }
  Eigen::ColPivHouseholderQR<RealMatrix> qr(v);
  qr.setThreshold(1e-10);
  return qr.rank() == d * d;
}

void OutcomeDistribution::validate() const {
  double sum = 0.0;
  for (double p : probabilities) {
    if (p < -1e-12 || p > 1.0 + 1e-12)
      throw std::invalid_argument("outcome probability outside [0, 1]");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-10)
    throw std::invalid_argument("outcome probabilities do not sum to 1");
  if (!counts.empty()) {
    if (counts.size() != probabilities.size())
      throw std::invalid_argument("count/probability size mismatch");
    if (std::accumulate(counts.begin(), counts.end(), std::int64_t{0}) != shots)
      throw std::invalid_argument("counts do not sum to the shot total");
  }
}

ProjectiveMeasurement setting_to_measurement(const MeasurementSetting& s,
                                             bool include_loss) {
  const LabeledBasis basis = common_eigenbasis(s);
  // One projector per sector label (rank > 1 for degenerate settings).
  std::vector<Matrix> projectors;
  std::vector<std::string> labels;
  for (Eigen::Index c = 0; c < basis.vectors.cols(); ++c) {
    const Matrix p = basis.vectors.col(c) * basis.vectors.col(c).adjoint();
    if (!labels.empty() && labels.back() == basis.labels[static_cast<size_t>(c)])
      projectors.back() += p;
    else {
      projectors.push_back(p);
      labels.push_back(basis.labels[static_cast<size_t>(c)]);
    }
  }
  return ProjectiveMeasurement(std::move(projectors), std::move(labels),
                               include_loss);
}

ProjectiveMeasurement bell_measurement(int n, bool include_loss) {
  if (n < 1) throw std::invalid_argument("bell_measurement: n >= 1");
  if (2 * n > 4)
    throw SizeLimitError("bell_measurement: at most 4 qubits (n <= 2)");
  const int m = 2 * n;
  const Eigen::Index d = Eigen::Index{1} << m;

  // U = prod_i H(i) * CNOT(i -> i+n); measurement pulls back |b><b| by U.
  Matrix u = Matrix::Identity(d, d);
  for (int i = 0; i < n; ++i) {
    Matrix cnot = Matrix::Zero(d, d);
    for (Eigen::Index b = 0; b < d; ++b) {
      const Eigen::Index control = (b >> (m - 1 - i)) & 1;
      Eigen::Index target = b;
      if (control) target ^= Eigen::Index{1} << (m - 1 - (i + n));
      cnot(target, b) = 1.0;
    }
    Matrix h = Matrix::Identity(1, 1);
    for (int k = 0; k < m; ++k) {
      Matrix factor = Matrix::Identity(2, 2);
      if (k == i) factor = (single_pauli('X') + single_pauli('Z')) / std::sqrt(2.0);
      h = kron(h, factor);
    }
    u = h * cnot * u;
  }
  const Matrix u_dag = u.adjoint();

  std::vector<Matrix> projectors;
  std::vector<std::string> labels;
  for (Eigen::Index b = 0; b < d; ++b) {
    const Vector v = u_dag.col(b);
    projectors.push_back(v * v.adjoint());
    std::string label(static_cast<size_t>(m), '0');
    for (int k = 0; k < m; ++k)
      if ((b >> (m - 1 - k)) & 1) label[static_cast<size_t>(k)] = '1';
    labels.push_back(std::move(label));
  }
  return ProjectiveMeasurement(std::move(projectors), std::move(labels),
                               include_loss);
}

namespace {

OutcomeDistribution born_rule(const std::vector<Matrix>& effects,
                              const std::vector<std::string>& labels,
                              bool include_loss, const DensityMatrix& rho) {
  if (effects.front().rows() != rho.dim())
    throw std::invalid_argument("measurement/state dimension mismatch");
  OutcomeDistribution dist;
  double sum = 0.0;
  for (size_t i = 0; i < effects.size(); ++i) {
    double p = (effects[i] * rho.entries()).trace().real();
    if (p < 0.0) {
      if (p < -1e-12)
        throw std::invalid_argument("negative outcome probability " +
                                    std::to_string(p));
      p = 0.0;
    }
    dist.probabilities.push_back(p);
    dist.labels.push_back(labels[i]);
    sum += p;
  }
  if (include_loss) {
    dist.probabilities.push_back(std::max(0.0, 1.0 - sum));
    dist.labels.push_back("loss");
    sum += dist.probabilities.back();
  }
  if (std::abs(sum - 1.0) > 1e-10)
    throw std::invalid_argument("distribution fails to normalize (sum = " +
                                std::to_string(sum) + ")");
  // Absorb sub-1e-10 float drift instead of re-scaling silently above it.
  const double scale = 1.0 / sum;
  for (double& p : dist.probabilities) p *= scale;
  return dist;
}

}  // namespace

OutcomeDistribution outcome_probabilities(const ProjectiveMeasurement& meas,
                                          const DensityMatrix& rho) {
  return born_rule(meas.projectors(), meas.labels(), meas.include_loss(), rho);
}

OutcomeDistribution outcome_probabilities(const PovmMeasurement& meas,
                                          const DensityMatrix& rho) {
  return born_rule(meas.effects(), meas.labels(), meas.include_loss(), rho);
}

OutcomeDistribution sample_outcomes(const OutcomeDistribution& dist,
                                    std::int64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  dist.validate();
  std::mt19937_64 rng(seed);
  OutcomeDistribution out = dist;
  out.shots = shots;
  out.counts.assign(dist.probabilities.size(), 0);
  // Conditional binomial decomposition of the multinomial.
  std::int64_t remaining = shots;
  double mass = 1.0;
  for (size_t i = 0; i + 1 < dist.probabilities.size() && remaining > 0; ++i) {
    const double p = std::clamp(dist.probabilities[i] / mass, 0.0, 1.0);
    std::binomial_distribution<std::int64_t> binom(remaining, p);
    const std::int64_t c = binom(rng);
    out.counts[i] = c;
    remaining -= c;
    mass -= dist.probabilities[i];
    if (mass <= 0.0) break;
  }
  out.counts.back() += remaining;
  return out;
}

std::int64_t pauli_measurement_cost(const PauliString& p) {
  std::int64_t basis_changes = 0;
  for (int k = 0; k < p.qubits(); ++k) {
    const char c = p.label(k);
    if (c == 'X' || c == 'Y') ++basis_changes;
  }
  return p.qubits() + basis_changes;
}

std::int64_t mub_setting_cost(int total_qubits, GateModel model) {
  const std::int64_t two_body = static_cast<std::int64_t>(total_qubits) * total_qubits;
  return model == GateModel::LocalTwoBody ? two_body * total_qubits : two_body;
}

std::int64_t bell_measurement_cost(int n) { return 2 * static_cast<std::int64_t>(n); }

}  // namespace qpt
