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

#include "qpt/channel_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qpt/errors.hpp"

namespace qpt {

std::string channel_to_json(const QuantumChannel& ch) {
  nlohmann::json j;
  j["qubit_count"] = ch.qubit_count();
  nlohmann::json ops = nlohmann::json::array();
  for (const Matrix& k : ch.kraus()) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < k.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index c = 0; c < k.cols(); ++c)
        row.push_back({k(r, c).real(), k(r, c).imag()});
      rows.push_back(std::move(row));
    }
    ops.push_back(std::move(rows));
  }
  j["kraus_operators"] = std::move(ops);
  return j.dump(2) + "\n";
}

QuantumChannel channel_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FileParseError(std::string("channel file is not valid JSON: ") +
                         e.what());
  }
  try {
    const int m = j.at("qubit_count").get<int>();
    if (m < 1 || m > 4)
      throw FileParseError("qubit_count must be in [1, 4]");
    const Eigen::Index d = Eigen::Index{1} << m;
    std::vector<Matrix> kraus;
    for (const auto& op : j.at("kraus_operators")) {
      if (static_cast<Eigen::Index>(op.size()) != d)
        throw FileParseError("Kraus operator has wrong row count");
      Matrix k(d, d);
      for (Eigen::Index r = 0; r < d; ++r) {
        const auto& row = op.at(static_cast<size_t>(r));
        if (static_cast<Eigen::Index>(row.size()) != d)
          throw FileParseError("Kraus operator has wrong column count");
        for (Eigen::Index c = 0; c < d; ++c) {
          const auto& pair = row.at(static_cast<size_t>(c));
          if (pair.size() != 2)
            throw FileParseError("matrix entries must be [real, imaginary]");
          k(r, c) = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
        }
      }
      kraus.push_back(std::move(k));
    }
    return QuantumChannel(std::move(kraus), m);
  } catch (const FileParseError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw FileParseError(std::string("channel file schema error: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FileParseError(std::string("channel file holds an invalid channel: ") +
                         e.what());
  }
}

QuantumChannel load_channel(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileParseError("cannot open channel file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return channel_from_json(buf.str());
}

void save_channel(const QuantumChannel& ch, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileParseError("cannot write channel file: " + path);
  out << channel_to_json(ch);
}

}  // namespace qpt
