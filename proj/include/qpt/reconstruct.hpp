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

#include "qpt/design.hpp"

namespace qpt {

struct ChiEstimate {
  ChiMatrix chi;
  double residual_norm;
  double condition_number;
};

// Minimum-norm least squares through a cached SVD; Hermiticity comes from the
// real parameterization, no positivity projection is applied.
class Reconstructor {
 public:
  explicit Reconstructor(DesignMatrix design);
  const DesignMatrix& design() const { return design_; }
  int rank() const { return rank_; }
  double condition_number() const { return condition_; }
  bool complete() const;  // rank == d^4

  // Throws RankDeficientError when the design does not determine chi.
  ChiEstimate reconstruct(const RealVector& frequencies) const;

 private:
  DesignMatrix design_;
  Eigen::BDCSVD<RealMatrix> svd_;
  int rank_;
  double condition_;
};

ChiEstimate reconstruct_chi(const DesignMatrix& design,
                            const RealVector& frequencies);

// Relaxation parameters of an amplitude-damping + pure-dephasing channel at
// evolution time t: gamma = 1 - exp(-t/T1) from the X/Y chi diagonal,
// coherence factor chi_II - chi_ZZ = exp(-t/T2); 1/T2 = 1/(2 T1) + 1/T_phi.
struct RelaxationEstimate {
  double t1;
  double t2;
  double gamma;              // population transfer 1 - exp(-t/T1)
  double dephasing_lambda;   // Z-mixing weight of the dephasing factor
  double model_residual;     // max |chi_hat - chi_model|
};

// Throws ModelMismatchError when chi is not of damping-dephasing form within
// 0.05 max-norm, and invalid_argument for decay-free (indeterminate) chi.
RelaxationEstimate extract_relaxation(const ChiEstimate& estimate, double time);

}  // namespace qpt
