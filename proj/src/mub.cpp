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

#include "qpt/mub.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "qpt/errors.hpp"

namespace qpt {

namespace {

// Symplectic (x|z) vector of a string, as one 2m-bit word.
std::uint64_t symplectic_bits(const PauliString& p) {
  return (static_cast<std::uint64_t>(p.z_bits()) << p.qubits()) | p.x_bits();
}

// GF(2) linear independence of the generators' symplectic vectors.
bool independent(const std::vector<PauliString>& gens) {
  std::vector<std::uint64_t> rows;
  for (const PauliString& g : gens) rows.push_back(symplectic_bits(g));
  // Gaussian elimination over GF(2).
  size_t rank = 0;
  for (int bit = 63; bit >= 0 && rank < rows.size(); --bit) {
    size_t pivot = rank;
    while (pivot < rows.size() && !((rows[pivot] >> bit) & 1)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t i = 0; i < rows.size(); ++i)
      if (i != rank && ((rows[i] >> bit) & 1)) rows[i] ^= rows[rank];
    ++rank;
  }
  return rank == rows.size();
}

}  // namespace

MeasurementSetting::MeasurementSetting(std::vector<PauliString> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty())
    throw std::invalid_argument("setting needs at least one generator");
  qubit_count_ = generators_.front().qubits();
  for (const PauliString& g : generators_) {
    if (g.qubits() != qubit_count_)
      throw std::invalid_argument("setting generators differ in length");
    if (g.is_identity())
      throw std::invalid_argument("identity is not a valid generator");
  }
  if (generator_count() > qubit_count_)
    throw std::invalid_argument("more generators than qubits");
  for (size_t i = 0; i < generators_.size(); ++i)
    for (size_t j = i + 1; j < generators_.size(); ++j)
      if (!commutes(generators_[i], generators_[j]))
        throw std::invalid_argument("setting generators do not commute: " +
                                    generators_[i].str() + " vs " +
                                    generators_[j].str());
  if (!independent(generators_))
    throw std::invalid_argument("setting generators are not independent");
}

std::string MeasurementSetting::str() const {
  std::string out;
  for (size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ",";
    out += generators_[i].str();
  }
  return out;
}

std::vector<PauliString> setting_elements(const MeasurementSetting& s) {
  std::vector<PauliString> out;
  const int g = s.generator_count();
  for (int mask = 1; mask < (1 << g); ++mask) {
    PauliString p = PauliString::identity(s.qubit_count());
    for (int i = 0; i < g; ++i)
      if ((mask >> i) & 1) p = pauli_product(p, s.generators()[static_cast<size_t>(i)]);
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LabeledBasis common_eigenbasis(const MeasurementSetting& s) {
  const int m = s.qubit_count();
  if (m > 4)
    throw SizeLimitError("common_eigenbasis supports at most 4 qubits");
  const Eigen::Index d = Eigen::Index{1} << m;
  const int g = s.generator_count();
  std::vector<Matrix> gen_matrices;
  for (const PauliString& p : s.generators()) gen_matrices.push_back(p.matrix());

  LabeledBasis out;
  out.vectors = Matrix(d, d);
  Eigen::Index col = 0;
  for (int o = 0; o < (1 << g); ++o) {
    Matrix proj = Matrix::Identity(d, d);
    std::string label;
    for (int i = 0; i < g; ++i) {
      const double sign = ((o >> (g - 1 - i)) & 1) ? -1.0 : 1.0;
      label += sign > 0 ? '+' : '-';
      proj = proj * 0.5 * (Matrix::Identity(d, d) + sign * gen_matrices[static_cast<size_t>(i)]);
    }
    const auto rank = static_cast<Eigen::Index>(std::lround(proj.trace().real()));
    if (rank == 0) continue;
    // Range basis via eigendecomposition; eigenvalues are 0 or 1.
    Eigen::SelfAdjointEigenSolver<Matrix> es(proj);
    for (Eigen::Index k = d - rank; k < d; ++k) {
      out.vectors.col(col) = phase_fixed(es.eigenvectors().col(k));
      out.labels.push_back(label);
      ++col;
    }
  }
  if (col != d)
    throw std::logic_error("eigenbasis sectors do not fill the space");
  return out;
}

namespace {

// Irreducible polynomials over GF(2), degree 1..8 (bit i = coefficient of x^i).
constexpr std::array<std::uint32_t, 9> kIrreducible = {
    0, 0b11, 0b111, 0b1011, 0b10011, 0b100101, 0b1000011, 0b10000011,
    0b100011011};

std::uint32_t gf_mul(std::uint32_t a, std::uint32_t b, int m) {
  const std::uint32_t poly = kIrreducible[static_cast<size_t>(m)];
  std::uint32_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> m) a ^= poly;
  }
  return r;
}

int gf_trace(std::uint32_t a, int m) {
  std::uint32_t t = 0, x = a;
  for (int i = 0; i < m; ++i) {
    t ^= x;
    x = gf_mul(x, x, m);
  }
  return static_cast<int>(t & 1);
}

// Dual of the polynomial basis under the trace form, via GF(2) Gram inverse.
std::vector<std::uint32_t> dual_basis(int m) {
  std::vector<std::vector<int>> aug(static_cast<size_t>(m),
                                    std::vector<int>(static_cast<size_t>(2 * m), 0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j)
      aug[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          gf_trace(gf_mul(1u << i, 1u << j, m), m);
    aug[static_cast<size_t>(i)][static_cast<size_t>(m + i)] = 1;
  }
  for (int c = 0; c < m; ++c) {
    int pivot = -1;
    for (int r = c; r < m; ++r)
      if (aug[static_cast<size_t>(r)][static_cast<size_t>(c)]) { pivot = r; break; }
    if (pivot < 0) throw std::logic_error("trace form is degenerate");
    std::swap(aug[static_cast<size_t>(c)], aug[static_cast<size_t>(pivot)]);
    for (int r = 0; r < m; ++r) {
      if (r == c || !aug[static_cast<size_t>(r)][static_cast<size_t>(c)]) continue;
      for (int k = 0; k < 2 * m; ++k)
        aug[static_cast<size_t>(r)][static_cast<size_t>(k)] ^=
            aug[static_cast<size_t>(c)][static_cast<size_t>(k)];
    }
  }
  std::vector<std::uint32_t> dual(static_cast<size_t>(m), 0);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      if (aug[static_cast<size_t>(i)][static_cast<size_t>(m + j)])
        dual[static_cast<size_t>(j)] ^= 1u << i;
  return dual;
}

}  // namespace

std::vector<MeasurementSetting> pauli_partition(int m) {
  if (m < 1 || m > 8)
    throw std::invalid_argument("pauli_partition supports m in [1, 8]");
  const auto dual = dual_basis(m);
  const std::uint32_t q = 1u << m;

  // x-part coordinates in the polynomial basis, z-part in its trace dual:
  // tr(x1*(c*x2) + x2*(c*x1)) = 0, so every class is isotropic for the
  // coordinatewise commutation form.
  auto x_coords = [&](std::uint32_t e) {
    std::uint32_t bits = 0;
    for (int i = 0; i < m; ++i)
      if (gf_trace(gf_mul(e, dual[static_cast<size_t>(i)], m), m)) bits |= 1u << i;
    return bits;
  };
  auto z_coords = [&](std::uint32_t e) {
    std::uint32_t bits = 0;
    for (int i = 0; i < m; ++i)
      if (gf_trace(gf_mul(e, 1u << i, m), m)) bits |= 1u << i;
    return bits;
  };

  std::vector<std::vector<PauliString>> classes;
  {
    std::vector<PauliString> z_class;
    for (std::uint32_t z = 1; z < q; ++z)
      z_class.push_back(PauliString::from_bits(0, z_coords(z), m));
    classes.push_back(std::move(z_class));
  }
  for (std::uint32_t c = 0; c < q; ++c) {
    std::vector<PauliString> cls;
    for (std::uint32_t x = 1; x < q; ++x)
      cls.push_back(PauliString::from_bits(x_coords(x), z_coords(gf_mul(c, x, m)), m));
    classes.push_back(std::move(cls));
  }

  for (auto& cls : classes) std::sort(cls.begin(), cls.end());
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  std::vector<MeasurementSetting> out;
  for (const auto& cls : classes) {
    // Greedy independent generating subset, in element order.
    std::vector<PauliString> gens;
    for (const PauliString& p : cls) {
      gens.push_back(p);
      if (!independent(gens)) gens.pop_back();
      if (static_cast<int>(gens.size()) == m) break;
    }
    out.emplace_back(std::move(gens));
  }
  return out;
}

MubFamily two_qubit_mub() {
  MubFamily family;
  family.settings = pauli_partition(2);
  for (const MeasurementSetting& s : family.settings)
    family.bases.push_back(common_eigenbasis(s));
  return family;
}

double max_unbiasedness_deviation(const MubFamily& family) {
  double worst = 0.0;
  if (family.bases.empty()) return worst;
  const double target = 1.0 / static_cast<double>(family.bases.front().vectors.rows());
  for (size_t i = 0; i < family.bases.size(); ++i)
    for (size_t j = i + 1; j < family.bases.size(); ++j) {
      const Matrix overlaps =
          family.bases[i].vectors.adjoint() * family.bases[j].vectors;
      worst = std::max(worst,
                       (overlaps.cwiseAbs2().array() - target).abs().maxCoeff());
    }
  return worst;
}

}  // namespace qpt
