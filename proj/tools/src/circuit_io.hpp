// Copyright 2026 The pqcalc Authors
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

#include <filesystem>
#include <string>

#include <json.hpp>

#include "pqc/circuit.hpp"

namespace pqc::io {

// Everything a circuit file describes.
struct CircuitFile {
  ParameterizedCircuit circuit;
  QuantumState state;
  Observable observable;
};

/// Parses a circuit document. Field errors throw pqc::Error with the JSON
/// path of the offending field in the message, e.g. "elements[2].param.index".
CircuitFile parse_circuit(const nlohmann::json& doc);

/// Parses `text`; syntax errors report line and column.
CircuitFile parse_circuit_text(const std::string& text);

CircuitFile load_circuit(const std::filesystem::path& path);

}  // namespace pqc::io
