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

#include <stdexcept>
#include <string>

namespace qpt {

// Exact-simulation caps and unsupported sizes (CLI exit code 2).
struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Design matrix does not determine all chi parameters (CLI exit code 3).
struct RankDeficientError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed channel files or other unreadable inputs (CLI exit code 4).
struct FileParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reconstructed chi is not of the assumed channel-model form.
struct ModelMismatchError : std::runtime_error {
  ModelMismatchError(const std::string& what, double residual_)
      : std::runtime_error(what), residual(residual_) {}
  double residual;
};

}  // namespace qpt
