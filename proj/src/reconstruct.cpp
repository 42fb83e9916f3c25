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

#include "qpt/reconstruct.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qpt/errors.hpp"

namespace qpt {

Reconstructor::Reconstructor(DesignMatrix design)
    : design_(std::move(design)),
      svd_(design_.entries, Eigen::ComputeThinU | Eigen::ComputeThinV) {
  const auto& s = svd_.singularValues();
  rank_ = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > 1e-10 * s(0)) ++rank_;
  const double smallest = s(s.size() - 1);
  condition_ = smallest > 0.0 ? s(0) / smallest
                              : std::numeric_limits<double>::infinity();
  svd_.setThreshold(1e-10);
}

bool Reconstructor::complete() const {
  return rank_ == static_cast<int>(design_.entries.cols());
}

ChiEstimate Reconstructor::reconstruct(const RealVector& frequencies) const {
  if (frequencies.size() != design_.entries.rows())
    throw std::invalid_argument("frequency vector does not match design rows");
  if (!complete())
    throw RankDeficientError(
        "design matrix rank " + std::to_string(rank_) + " < " +
        std::to_string(design_.entries.cols()) +
        " chi parameters; the scheme instance is incomplete");
  const RealVector x = svd_.solve(frequencies);
  const double residual = (design_.entries * x - frequencies).norm();
  return ChiEstimate{unpack_chi(x, design_.qubit_count), residual, condition_};
}

ChiEstimate reconstruct_chi(const DesignMatrix& design,
                            const RealVector& frequencies) {
  return Reconstructor(design).reconstruct(frequencies);
}

RelaxationEstimate extract_relaxation(const ChiEstimate& estimate, double time) {
  if (time <= 0.0) throw std::invalid_argument("evolution time must be > 0");
  const Matrix& chi = estimate.chi.entries();
  if (chi.rows() != 4)
    throw std::invalid_argument("relaxation extraction expects a 1-qubit chi");

  const double gamma = 2.0 * (chi(1, 1).real() + chi(2, 2).real());
  const double coherence = chi(0, 0).real() - chi(3, 3).real();
  if (gamma < 1e-9)
    throw std::invalid_argument(
        "no population decay: relaxation rates are indeterminate");
  if (gamma >= 1.0 || coherence <= 0.0 || coherence >= 1.0)
    throw ModelMismatchError("decay parameters outside the physical range",
                             std::max(gamma - 1.0, -coherence));

  const double root = std::sqrt(1.0 - gamma);
  const double lambda = 0.5 * (1.0 - coherence / root);
  double residual;
  {
    // Rebuild the model chi and compare entrywise.
    const double a = 0.5 * (1.0 + root), b = 0.5 * (1.0 - root);
    Matrix model = Matrix::Zero(4, 4);
    const double lam = lambda;
    model(0, 0) = (1.0 - lam) * a * a + lam * b * b;
    model(3, 3) = (1.0 - lam) * b * b + lam * a * a;
    model(0, 3) = model(3, 0) = a * b;
    model(1, 1) = model(2, 2) = 0.25 * gamma;
    model(1, 2) = Complex(0.0, -0.25 * gamma);
    model(2, 1) = Complex(0.0, 0.25 * gamma);
    residual = max_abs_diff(chi, model);
  }
  if (lambda < -0.025 || lambda > 1.025 || residual > 0.05)
    throw ModelMismatchError(
        "chi is not of damping-dephasing form (max deviation " +
            std::to_string(residual) + ")",
        residual);

  const double t1 = -time / std::log1p(-gamma);
  const double t2 = -time / std::log(coherence);
  return RelaxationEstimate{t1, t2, gamma, lambda, residual};
}

}  // namespace qpt
