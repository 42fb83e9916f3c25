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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qpt/channel_io.hpp"
#include "qpt/design.hpp"
#include "qpt/errors.hpp"
#include "qpt/mub.hpp"
#include "qpt/reconstruct.hpp"
#include "qpt/resources.hpp"
#include "qpt/sweep.hpp"

namespace {

using namespace qpt;

std::string g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string amplitude(const Complex& a) {
  return g17(a.real()) + (a.imag() < 0 ? "-" : "+") + g17(std::abs(a.imag())) + "i";
}

struct RunConfig {
  std::string scheme = "dcqd";
  int n = 1;
  std::string n_range;  // resources: INT or A..B
  std::string channel = "identity";
  std::string channel_file;
  std::int64_t shots = 0;
  std::string shots_list;  // sweep: comma-separated
  bool exact = false;
  std::uint64_t seed = 0;
  double epsilon = 0.1;
  int trials = 50;
  std::string out_path;
  std::string format = "text";
  std::string design_csv;
  int partition_m = 2;
  std::string model = "nonlocal";
};

QuantumChannel make_channel(const RunConfig& rc) {
  if (!rc.channel_file.empty()) return load_channel(rc.channel_file);
  const std::string& s = rc.channel;
  auto args = [&](size_t count) {
    const auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')')
      throw std::invalid_argument("preset '" + s + "' needs " +
                                  std::to_string(count) + " parameter(s)");
    std::vector<double> vals;
    std::stringstream ss(s.substr(open + 1, s.size() - open - 2));
    std::string cell;
    while (std::getline(ss, cell, ',')) vals.push_back(std::stod(cell));
    if (vals.size() != count)
      throw std::invalid_argument("preset '" + s + "' needs " +
                                  std::to_string(count) + " parameter(s)");
    return vals;
  };
  const std::string name = s.substr(0, s.find('('));
  QuantumChannel one = identity_channel(1);
  if (name == "identity") {
    return identity_channel(rc.n);
  } else if (name == "depolarizing") {
    one = depolarizing(args(1)[0]);
  } else if (name == "bit-flip") {
    one = bit_flip(args(1)[0]);
  } else if (name == "amplitude-damping") {
    one = amplitude_damping(args(1)[0]);
  } else if (name == "damping-dephasing") {
    const auto v = args(2);
    one = damping_dephasing(v[0], v[1]);
  } else if (name == "loss") {
    one = loss_channel(args(1)[0]);
  } else {
    throw std::invalid_argument("unknown channel preset '" + name + "'");
  }
  QuantumChannel ch = one;
  for (int k = 1; k < rc.n; ++k) ch = tensor(ch, one);
  return ch;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw FileParseError("cannot open output path: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void dump_distributions(const ExperimentPlan& plan,
                        const std::vector<OutcomeDistribution>& dists,
                        std::ostream& os) {
  for (size_t i = 0; i < dists.size(); ++i) {
    os << "config " << plan.configs[i].label << "\n";
    const auto& d = dists[i];
    for (size_t o = 0; o < d.probabilities.size(); ++o) {
      os << "  outcome " << d.labels[o] << " p=" << g17(d.probabilities[o]);
      if (!d.counts.empty()) os << " count=" << d.counts[o];
      os << "\n";
    }
  }
}

void dump_chi(const Matrix& chi, std::ostream& os) {
  os << "chi_re\n";
  for (Eigen::Index r = 0; r < chi.rows(); ++r) {
    for (Eigen::Index c = 0; c < chi.cols(); ++c)
      os << (c ? " " : "  ") << g17(chi(r, c).real());
    os << "\n";
  }
  os << "chi_im\n";
  for (Eigen::Index r = 0; r < chi.rows(); ++r) {
    for (Eigen::Index c = 0; c < chi.cols(); ++c)
      os << (c ? " " : "  ") << g17(chi(r, c).imag());
    os << "\n";
  }
}

int cmd_plan(const RunConfig& rc) {
  const ExperimentPlan plan = build_plan(parse_scheme(rc.scheme), rc.n);
  Output out(rc.out_path);
  std::ostream& os = out.stream();
  os << "plan scheme=" << scheme_name(plan.scheme) << " n=" << plan.n
     << " ancillas=" << plan.ancilla_count << " configs=" << plan.configs.size()
     << " simulable=" << (plan.simulable ? "yes" : "no") << "\n";
  for (const Config& c : plan.configs) {
    os << "config " << c.label << "\n";
    os << "  input";
    for (Eigen::Index i = 0; i < c.input.dim(); ++i)
      os << " " << amplitude(c.input.amplitudes()(i));
    os << "\n";
    os << "  measurement " << c.measurement.description << "\n";
    os << "  outcomes";
    for (const auto& l : c.measurement.outcome_labels) os << " " << l;
    os << " loss\n";
  }
  return 0;
}

int cmd_reconstruct(const RunConfig& rc) {
  if (!rc.exact && rc.shots <= 0)
    throw std::invalid_argument("reconstruct needs --exact or --shots N");
  const ExperimentPlan plan = build_plan(parse_scheme(rc.scheme), rc.n);
  const QuantumChannel channel = make_channel(rc);
  const DesignMatrix design = build_design_matrix(plan);
  if (!rc.design_csv.empty()) {
    std::ofstream f(rc.design_csv, std::ios::binary);
    if (!f) throw FileParseError("cannot open design CSV path: " + rc.design_csv);
    write_design_csv(design, f);
  }
  const auto dists = simulate_experiment(
      plan, channel,
      rc.exact ? std::optional<std::int64_t>{} : std::optional<std::int64_t>{rc.shots},
      rc.seed);
  const Reconstructor solver(design);
  const ChiEstimate est = solver.reconstruct(stack_frequencies(plan, dists));

  Output out(rc.out_path);
  std::ostream& os = out.stream();
  os << "reconstruct scheme=" << scheme_name(plan.scheme) << " n=" << plan.n
     << " channel=" << (rc.channel_file.empty() ? rc.channel : rc.channel_file)
     << " mode=" << (rc.exact ? "exact" : "shots=" + std::to_string(rc.shots))
     << " seed=" << rc.seed << "\n";
  dump_distributions(plan, dists, os);
  dump_chi(est.chi.entries(), os);
  os << "residual_norm=" << g17(est.residual_norm) << "\n";
  os << "condition_number=" << g17(est.condition_number) << "\n";
  const ChiMatrix truth = kraus_to_chi(channel);
  os << "max_abs_error_vs_true="
     << g17(max_abs_diff(est.chi.entries(), truth.entries())) << "\n";
  return 0;
}

int cmd_resources(const RunConfig& rc) {
  int n_min = rc.n, n_max = rc.n;
  if (!rc.n_range.empty()) {
    const auto dots = rc.n_range.find("..");
    if (dots == std::string::npos) {
      n_min = n_max = std::stoi(rc.n_range);
    } else {
      n_min = std::stoi(rc.n_range.substr(0, dots));
      n_max = std::stoi(rc.n_range.substr(dots + 2));
    }
  }
  const GateModel model =
      rc.model == "local" ? GateModel::LocalTwoBody : GateModel::NonlocalTwoBody;
  const auto rows = comparison_table(n_min, n_max, model, rc.epsilon);
  Output out(rc.out_path);
  if (rc.format == "text")
    write_resource_text(rows, out.stream());
  else
    write_resource_csv(rows, out.stream());
  return 0;
}

int cmd_sweep(const RunConfig& rc) {
  if (rc.exact)
    throw std::invalid_argument("the precision sweep requires sampling, not --exact");
  std::vector<std::int64_t> shots;
  {
    std::stringstream ss(rc.shots_list);
    std::string cell;
    while (std::getline(ss, cell, ',')) shots.push_back(std::stoll(cell));
  }
  const ExperimentPlan plan = build_plan(parse_scheme(rc.scheme), rc.n);
  const QuantumChannel channel = make_channel(rc);
  const SweepResult result = precision_sweep(plan, channel, shots, rc.trials, rc.seed);

  Output out(rc.out_path);
  std::ostream& os = out.stream();
  os << "sweep scheme=" << scheme_name(plan.scheme) << " n=" << plan.n
     << " channel=" << (rc.channel_file.empty() ? rc.channel : rc.channel_file)
     << " trials=" << result.trials << " seed=" << rc.seed << "\n";
  for (const SweepPoint& p : result.points) {
    os << "N=" << p.shots << " aggregate_std=" << g17(p.aggregate_std)
       << " per_element";
    for (double s : p.per_element_std) os << " " << g17(s);
    os << "\n";
  }
  os << "slope=" << g17(result.slope) << " stderr=" << g17(result.slope_stderr)
     << "\n";
  return 0;
}

int cmd_partition(const RunConfig& rc) {
  const auto settings = pauli_partition(rc.partition_m);
  Output out(rc.out_path);
  std::ostream& os = out.stream();
  for (const MeasurementSetting& s : settings) {
    const auto elements = setting_elements(s);
    for (size_t i = 0; i < elements.size(); ++i)
      os << (i ? "," : "") << elements[i].str();
    os << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Desk-scale quantum-process-tomography workbench"};
  app.require_subcommand(1);
  RunConfig rc;

  auto add_common = [&](CLI::App* cmd, bool with_channel) {
    cmd->add_option("--scheme", rc.scheme,
                    "sqpt | aapt-sep | aapt-mub | aapt-povm | dcqd");
    cmd->add_option("--n", rc.n, "system qubit count");
    cmd->add_option("--seed", rc.seed, "RNG seed (default 0)");
    cmd->add_option("--out", rc.out_path, "output path (default stdout)");
    cmd->add_option("--format", rc.format, "csv | text")
        ->check(CLI::IsMember({"csv", "text"}));
    if (with_channel) {
      cmd->add_option("--channel", rc.channel,
                      "identity | depolarizing(p) | bit-flip(p) | "
                      "amplitude-damping(g) | damping-dephasing(g,l) | loss(e)");
      cmd->add_option("--channel-file", rc.channel_file, "channel JSON path");
    }
  };

  CLI::App* plan = app.add_subcommand("plan", "write an experiment plan dump");
  add_common(plan, false);

  CLI::App* rec = app.add_subcommand(
      "reconstruct", "simulate a channel through a scheme and reconstruct chi");
  add_common(rec, true);
  rec->add_option("--shots", rc.shots, "shots per configuration");
  rec->add_flag("--exact", rc.exact, "use exact Born probabilities");
  rec->add_option("--design-csv", rc.design_csv, "also dump the design matrix CSV");

  CLI::App* res = app.add_subcommand("resources", "emit the resource comparison table");
  res->add_option("--n", rc.n_range, "INT or A..B range");
  res->add_option("--epsilon", rc.epsilon, "target precision (default 0.1)");
  res->add_option("--model", rc.model, "nonlocal | local two-body gates")
      ->check(CLI::IsMember({"nonlocal", "local"}));
  res->add_option("--out", rc.out_path, "output path (default stdout)");
  res->add_option("--format", rc.format, "csv | text")
      ->check(CLI::IsMember({"csv", "text"}));

  CLI::App* sweep = app.add_subcommand(
      "sweep", "repeated sampled reconstructions across shot counts");
  add_common(sweep, true);
  sweep->add_option("--shots", rc.shots_list,
                    "comma-separated shot counts (>= 4 values, >= 2 decades)");
  sweep->add_option("--trials", rc.trials, "trials per shot count (>= 20)");
  sweep->add_flag("--exact", rc.exact, "(rejected; sweeps need sampling)");

  CLI::App* part = app.add_subcommand("partition", "dump a commuting Pauli partition");
  part->add_option("--m", rc.partition_m, "qubit count (1..8)");
  part->add_option("--out", rc.out_path, "output path (default stdout)");

  // `resources` defaults to CSV, everything else to text.
  app.preparse_callback([&](size_t) { rc.format = ""; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (rc.format.empty()) rc.format = res->parsed() ? "csv" : "text";
    if (plan->parsed()) return cmd_plan(rc);
    if (rec->parsed()) return cmd_reconstruct(rc);
    if (res->parsed()) return cmd_resources(rc);
    if (sweep->parsed()) return cmd_sweep(rc);
    if (part->parsed()) return cmd_partition(rc);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const RankDeficientError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const FileParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
