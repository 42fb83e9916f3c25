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

#include "qpt/plan.hpp"

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

#include "qpt/errors.hpp"

namespace qpt {

namespace {

constexpr int kMaxPlanQubits = 4;       // structural plans, per scheme formulas
constexpr int kMaxSimulatedQubits = 4;  // exact-simulation cap

const Complex kI(0.0, 1.0);

Vector ket2(Complex a, Complex b) {
  Vector v(2);
  v << a, b;
  return v;
}

// Interleave n two-qubit (system, ancilla) blocks into system-first order.
std::vector<int> pair_interleave_perm(int n) {
  std::vector<int> perm(static_cast<size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    perm[static_cast<size_t>(i)] = 2 * i;
    perm[static_cast<size_t>(n + i)] = 2 * i + 1;
  }
  return perm;
}

KetVector interleave_pairs(const std::vector<Vector>& pair_states) {
  Vector v = pair_states.front();
  for (size_t i = 1; i < pair_states.size(); ++i) v = kron(v, pair_states[i]);
  if (pair_states.size() == 1) return KetVector(std::move(v));
  return KetVector(permute_qubits(v, pair_interleave_perm(static_cast<int>(pair_states.size()))));
}

Matrix interleave_pairs(const std::vector<Matrix>& pair_mats) {
  Matrix m = pair_mats.front();
  for (size_t i = 1; i < pair_mats.size(); ++i) m = kron(m, pair_mats[i]);
  if (pair_mats.size() == 1) return m;
  return permute_qubits(m, pair_interleave_perm(static_cast<int>(pair_mats.size())));
}

// ---- DCQD single-pair building blocks -------------------------------------

struct DcqdLeg {
  std::string name;
  char frame;
  Vector input;                        // two qubits: (system, ancilla)
  std::array<Matrix, 4> projectors;    // outcome order I, X, Y, Z
};

std::array<Vector, 4> bell_kets_error_order() {
  const double s = 1.0 / std::sqrt(2.0);
  std::array<Vector, 4> bells;
  bells[0] = (Vector(4) << s, 0, 0, s).finished();    // Phi+ <-> I
  bells[1] = (Vector(4) << 0, s, s, 0).finished();    // Psi+ <-> X
  bells[2] = (Vector(4) << 0, s, -s, 0).finished();   // Psi- <-> Y
  bells[3] = (Vector(4) << s, 0, 0, -s).finished();   // Phi- <-> Z
  return bells;
}

Matrix hadamard() { return (single_pauli('X') + single_pauli('Z')) / std::sqrt(2.0); }

Matrix phase_s() {
  Matrix s(2, 2);
  s << 1, 0, 0, kI;
  return s;
}

std::vector<DcqdLeg> dcqd_legs() {
  const double alpha = std::sqrt(0.75);
  const double beta = std::sqrt(0.25);
  const auto bells = bell_kets_error_order();

  Vector phi_plus(4);
  phi_plus << 1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0);
  Vector coherence(4);
  coherence << alpha, 0, 0, kI * beta;

  const Matrix frame_z = Matrix::Identity(4, 4);
  const Matrix frame_x = kron(hadamard(), hadamard());
  const Matrix v_y = phase_s() * hadamard();  // maps Z to Y
  const Matrix frame_y = kron(v_y, v_y.conjugate());

  std::vector<DcqdLeg> legs;
  auto add = [&](const std::string& name, char frame_tag, const Matrix& frame,
                 const Vector& in) {
    DcqdLeg leg;
    leg.name = name;
    leg.frame = frame_tag;
    leg.input = frame * in;
    for (int o = 0; o < 4; ++o) {
      const Vector b = frame * bells[static_cast<size_t>(o)];
      leg.projectors[static_cast<size_t>(o)] = b * b.adjoint();
    }
    legs.push_back(std::move(leg));
  };
  add("population", 'z', frame_z, phi_plus);
  add("coherence-z", 'z', frame_z, coherence);
  add("coherence-x", 'x', frame_x, coherence);
  add("coherence-y", 'y', frame_y, coherence);
  return legs;
}

const std::array<std::string, 4> kErrorLabels = {"I", "X", "Y", "Z"};

ConfigMeasurement dcqd_measurement(const std::vector<const DcqdLeg*>& legs,
                                   bool materialize) {
  ConfigMeasurement meas;
  meas.description = "bell{ZZ,XX} frames=";
  for (const DcqdLeg* leg : legs) meas.description += leg->frame;
  const int n = static_cast<int>(legs.size());
  const int outcomes = 1 << (2 * n);
  for (int o = 0; o < outcomes; ++o) {
    std::string label;
    for (int i = 0; i < n; ++i)
      label += kErrorLabels[static_cast<size_t>((o >> (2 * (n - 1 - i))) & 3)];
    meas.outcome_labels.push_back(std::move(label));
  }
  if (materialize) {
    std::vector<Matrix> projectors;
    for (int o = 0; o < outcomes; ++o) {
      std::vector<Matrix> parts;
      for (int i = 0; i < n; ++i)
        parts.push_back(
            legs[static_cast<size_t>(i)]->projectors[static_cast<size_t>((o >> (2 * (n - 1 - i))) & 3)]);
      projectors.push_back(interleave_pairs(parts));
    }
    meas.projective = std::make_shared<ProjectiveMeasurement>(
        std::move(projectors), meas.outcome_labels, /*include_loss=*/true);
  }
  return meas;
}

// ---- SQPT building blocks --------------------------------------------------

struct PreparedState {
  std::string name;
  Vector ket;
};

std::vector<PreparedState> sqpt_single_qubit_inputs() {
  const double s = 1.0 / std::sqrt(2.0);
  return {{"0", ket2(1, 0)},
          {"1", ket2(0, 1)},
          {"+", ket2(s, s)},
          {"+i", ket2(s, s * kI)}};
}

std::string digits_to_labels(int index, int n, const char* alphabet, int radix) {
  std::string out(static_cast<size_t>(n), alphabet[0]);
  for (int k = n - 1; k >= 0; --k) {
    out[static_cast<size_t>(k)] = alphabet[index % radix];
    index /= radix;
  }
  return out;
}

// Joint single-qubit Pauli setting on `qubits` qubits, e.g. "XZ".
MeasurementSetting local_setting(const std::string& labels) {
  std::vector<PauliString> gens;
  for (size_t k = 0; k < labels.size(); ++k) {
    std::string s(labels.size(), 'I');
    s[k] = labels[k];
    gens.emplace_back(s);
  }
  return MeasurementSetting(std::move(gens));
}

ConfigMeasurement shared_projective(const std::shared_ptr<const ProjectiveMeasurement>& m,
                                    std::string description) {
  ConfigMeasurement meas;
  meas.description = std::move(description);
  meas.projective = m;
  for (size_t i = 0; i < m->projectors().size(); ++i)
    meas.outcome_labels.push_back(m->labels()[i]);
  return meas;
}

ConfigMeasurement unmaterialized(std::string description,
                                 std::vector<std::string> outcome_labels) {
  ConfigMeasurement meas;
  meas.description = std::move(description);
  meas.outcome_labels = std::move(outcome_labels);
  return meas;
}

std::vector<std::string> sign_labels(int qubits) {
  std::vector<std::string> out;
  for (int o = 0; o < (1 << qubits); ++o) {
    std::string label;
    for (int k = 0; k < qubits; ++k)
      label += ((o >> (qubits - 1 - k)) & 1) ? '-' : '+';
    out.push_back(std::move(label));
  }
  return out;
}

}  // namespace

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::Sqpt: return "sqpt";
    case Scheme::AaptSeparable: return "aapt-sep";
    case Scheme::AaptMub: return "aapt-mub";
    case Scheme::AaptPovm: return "aapt-povm";
    case Scheme::Dcqd: return "dcqd";
  }
  throw std::logic_error("unknown scheme");
}

Scheme parse_scheme(const std::string& name) {
  for (Scheme s : all_schemes())
    if (scheme_name(s) == name) return s;
  throw std::invalid_argument("unknown scheme '" + name +
                              "' (expected sqpt, aapt-sep, aapt-mub, aapt-povm or dcqd)");
}

const std::vector<Scheme>& all_schemes() {
  static const std::vector<Scheme> schemes = {
      Scheme::Sqpt, Scheme::AaptSeparable, Scheme::AaptMub, Scheme::AaptPovm,
      Scheme::Dcqd};
  return schemes;
}

PovmMeasurement tetrahedron_povm() {
  const double s = 1.0 / std::sqrt(3.0);
  const std::array<std::array<double, 3>, 4> axes = {
      {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}}};
  std::vector<Matrix> single;
  for (const auto& a : axes)
    single.push_back(0.25 * (Matrix::Identity(2, 2) + a[0] * single_pauli('X') +
                             a[1] * single_pauli('Y') + a[2] * single_pauli('Z')));
  std::vector<Matrix> effects;
  std::vector<std::string> labels;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      effects.push_back(kron(single[static_cast<size_t>(i)], single[static_cast<size_t>(j)]));
      labels.push_back("e" + std::to_string(i) + std::to_string(j));
    }
  return PovmMeasurement(std::move(effects), std::move(labels));
}

std::vector<Config> dcqd_configs() {
  const auto legs = dcqd_legs();
  std::vector<Config> configs;
  for (const DcqdLeg& leg : legs) {
    Config c{leg.name, KetVector(leg.input), dcqd_measurement({&leg}, true)};
    configs.push_back(std::move(c));
  }
  return configs;
}

ExperimentPlan dcqd_with_product_input(const KetVector& product_state) {
  if (product_state.qubit_count() != 2)
    throw std::invalid_argument("product state must live on 2 qubits");
  ExperimentPlan plan = build_plan(Scheme::Dcqd, 1);
  for (size_t i = 1; i < plan.configs.size(); ++i) {
    plan.configs[i].input = product_state;
    plan.configs[i].label += "(product)";
  }
  return plan;
}

namespace {

ExperimentPlan build_dcqd(int n) {
  const auto legs = dcqd_legs();
  const bool simulable = 2 * n <= kMaxSimulatedQubits;
  ExperimentPlan plan{Scheme::Dcqd, n, n, n, {}, simulable};
  const int count = 1 << (2 * n);  // 4^n
  for (int idx = 0; idx < count; ++idx) {
    std::vector<const DcqdLeg*> chosen;
    std::vector<Vector> inputs;
    std::string label;
    for (int i = 0; i < n; ++i) {
      const auto& leg = legs[static_cast<size_t>((idx >> (2 * (n - 1 - i))) & 3)];
      chosen.push_back(&leg);
      inputs.push_back(leg.input);
      if (i) label += "*";
      label += leg.name;
    }
    Config c{label, interleave_pairs(inputs), dcqd_measurement(chosen, simulable)};
    if (schmidt_rank(c.input.amplitudes(), n) < 2)
      throw std::logic_error("DCQD input is not entangled across the cut");
    plan.configs.push_back(std::move(c));
  }
  return plan;
}

ExperimentPlan build_sqpt(int n) {
  const bool simulable = n <= kMaxSimulatedQubits;
  ExperimentPlan plan{Scheme::Sqpt, n, 0, 0, {}, simulable};
  const auto singles = sqpt_single_qubit_inputs();
  const int input_count = 1 << (2 * n);  // 4^n
  const int setting_count = 1 << (2 * n);

  // The "I" setting is realized as Z; the loss outcome supplies the trace.
  std::map<std::string, std::shared_ptr<const ProjectiveMeasurement>> devices;
  std::vector<std::shared_ptr<const ProjectiveMeasurement>> realized;
  std::vector<std::string> setting_names, realized_names;
  for (int sidx = 0; sidx < setting_count; ++sidx) {
    std::string name = digits_to_labels(sidx, n, "IXYZ", 4);
    std::string realization = name;
    for (char& c : realization)
      if (c == 'I') c = 'Z';
    setting_names.push_back(name);
    realized_names.push_back(realization);
    auto it = devices.find(realization);
    if (it == devices.end())
      it = devices.emplace(realization,
                           std::make_shared<ProjectiveMeasurement>(setting_to_measurement(
                               local_setting(realization), /*include_loss=*/true)))
               .first;
    realized.push_back(it->second);
  }

  for (int iidx = 0; iidx < input_count; ++iidx) {
    std::vector<Vector> kets;
    std::string prep;
    for (int k = 0; k < n; ++k) {
      const auto& s =
          singles[static_cast<size_t>((iidx >> (2 * (n - 1 - k))) & 3)];
      kets.push_back(s.ket);
      if (k) prep += ".";
      prep += s.name;
    }
    Vector input = kets.front();
    for (size_t k = 1; k < kets.size(); ++k) input = kron(input, kets[k]);
    for (int sidx = 0; sidx < setting_count; ++sidx) {
      Config c{"prep=" + prep + ";meas=" + setting_names[static_cast<size_t>(sidx)],
               KetVector(input),
               shared_projective(realized[static_cast<size_t>(sidx)],
                                 "pauli{" + realized_names[static_cast<size_t>(sidx)] +
                                     "}+loss")};
      plan.configs.push_back(std::move(c));
    }
  }
  return plan;
}

KetVector phi_plus_power(int n) {
  Vector pair(4);
  pair << 1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0);
  std::vector<Vector> pairs(static_cast<size_t>(n), pair);
  return interleave_pairs(pairs);
}

ExperimentPlan build_aapt_sep(int n) {
  const int m = 2 * n;
  const bool simulable = m <= kMaxSimulatedQubits;
  ExperimentPlan plan{Scheme::AaptSeparable, n, n, n, {}, simulable};
  const KetVector input = phi_plus_power(n);
  int count = 1;
  for (int k = 0; k < m; ++k) count *= 3;  // 3^(2n) distinct devices
  for (int sidx = 0; sidx < count; ++sidx) {
    const std::string name = digits_to_labels(sidx, m, "XYZ", 3);
    ConfigMeasurement meas;
    if (simulable)
      meas = shared_projective(std::make_shared<ProjectiveMeasurement>(
                                   setting_to_measurement(local_setting(name), true)),
                               "pauli{" + name + "}+loss");
    else
      meas = unmaterialized("pauli{" + name + "}+loss", sign_labels(m));
    plan.configs.push_back(Config{"prep=phi+^" + std::to_string(n) + ";meas=" + name,
                                  input, std::move(meas)});
  }
  return plan;
}

ExperimentPlan build_aapt_mub(int n) {
  const int m = 2 * n;
  const bool simulable = m <= kMaxSimulatedQubits;
  ExperimentPlan plan{Scheme::AaptMub, n, n, n, {}, simulable};
  const KetVector input = phi_plus_power(n);
  const auto settings = pauli_partition(m);
  for (size_t i = 0; i < settings.size(); ++i) {
    ConfigMeasurement meas;
    if (simulable)
      meas = shared_projective(std::make_shared<ProjectiveMeasurement>(
                                   setting_to_measurement(settings[i], true)),
                               "eigenbasis{" + settings[i].str() + "}+loss");
    else
      meas = unmaterialized("eigenbasis{" + settings[i].str() + "}+loss",
                            sign_labels(m));
    plan.configs.push_back(Config{"prep=phi+^" + std::to_string(n) + ";mub=" +
                                      std::to_string(i),
                                  input, std::move(meas)});
  }
  return plan;
}

ExperimentPlan build_aapt_povm(int n) {
  if (n != 1)
    throw SizeLimitError("aapt-povm supports n = 1 (the POVM is treated "
                         "abstractly; larger n is analytic only)");
  ExperimentPlan plan{Scheme::AaptPovm, n, 3 * n, n, {}, true};
  auto povm = std::make_shared<PovmMeasurement>(tetrahedron_povm());
  ConfigMeasurement meas;
  meas.description = "ic-povm{tetrahedron x tetrahedron}+loss";
  meas.povm = povm;
  meas.outcome_labels = povm->labels();
  plan.configs.push_back(
      Config{"prep=phi+;povm", phi_plus_power(1), std::move(meas)});
  return plan;
}

}  // namespace

ExperimentPlan build_plan(Scheme scheme, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > kMaxPlanQubits)
    throw SizeLimitError("plans support n <= " + std::to_string(kMaxPlanQubits) +
                         " system qubits (got n = " + std::to_string(n) + ")");
  switch (scheme) {
    case Scheme::Sqpt: return build_sqpt(n);
    case Scheme::AaptSeparable: return build_aapt_sep(n);
    case Scheme::AaptMub: return build_aapt_mub(n);
    case Scheme::AaptPovm: return build_aapt_povm(n);
    case Scheme::Dcqd: return build_dcqd(n);
  }
  throw std::logic_error("unknown scheme");
}

}  // namespace qpt
