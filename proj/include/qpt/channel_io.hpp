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

#include <string>

#include "qpt/channel.hpp"

namespace qpt {

// Channel file format: {"qubit_count": m, "kraus_operators": [...]} where each
// operator is a row-major matrix of [real, imaginary] pairs. Doubles are
// written with their shortest round-trippable decimal representation, so
// parse -> serialize is bit-exact.
std::string channel_to_json(const QuantumChannel& ch);
QuantumChannel channel_from_json(const std::string& text);  // throws FileParseError

QuantumChannel load_channel(const std::string& path);
void save_channel(const QuantumChannel& ch, const std::string& path);

}  // namespace qpt
