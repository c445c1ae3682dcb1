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

#include "circuit_io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "pqc/error.hpp"

namespace pqc::io {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& why,
                       ErrorCode code = ErrorCode::kInvalidArgument) {
  throw Error(code, path + ": " + why);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing");
  return *it;
}

std::size_t to_size(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    fail(path, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

double to_real(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

// A complex entry is either a plain number or [re, im].
Complex to_complex(const json& v, const std::string& path) {
  if (v.is_number()) return v.get<double>();
  if (!v.is_array() || v.size() != 2) fail(path, "expected a number or [re, im]");
  return {to_real(v[0], path + "[0]"), to_real(v[1], path + "[1]")};
}

ComplexMatrix to_matrix(const json& v, const std::string& path) {
  if (!v.is_array() || v.empty()) fail(path, "expected a non-empty array of rows");
  const std::size_t n = v.size();
  ComplexMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string row = path + "[" + std::to_string(r) + "]";
    if (!v[r].is_array() || v[r].size() != n) {
      fail(row, "expected " + std::to_string(n) + " entries", ErrorCode::kDimensionMismatch);
    }
    for (std::size_t c = 0; c < n; ++c) {
      m(r, c) = to_complex(v[r][c], row + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

std::vector<PauliTerm> to_pauli_sum(const json& v, const std::string& path, std::size_t width) {
  if (!v.is_array() || v.empty()) fail(path, "expected a non-empty array of terms");
  std::vector<PauliTerm> terms;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string at = path + "[" + std::to_string(i) + "]";
    PauliTerm t;
    t.coefficient = to_real(field(v[i], "coeff", at), at + ".coeff");
    const json& word = field(v[i], "word", at);
    if (!word.is_string()) fail(at + ".word", "expected a string");
    t.factors = word.get<std::string>();
    if (t.factors.size() != width) {
      fail(at + ".word", "expected " + std::to_string(width) + " factors",
           ErrorCode::kDimensionMismatch);
    }
    if (t.factors.find_first_not_of("IXYZ") != std::string::npos) {
      fail(at + ".word", "factors must be I, X, Y or Z");
    }
    terms.push_back(std::move(t));
  }
  return terms;
}

std::vector<std::size_t> to_targets(const json& obj, const std::string& path, std::size_t qubits) {
  std::vector<std::size_t> targets;
  const auto it = obj.find("targets");
  if (it == obj.end()) {
    for (std::size_t q = 0; q < qubits; ++q) targets.push_back(q);
    return targets;
  }
  if (!it->is_array() || it->empty()) fail(path + ".targets", "expected a non-empty array");
  for (std::size_t i = 0; i < it->size(); ++i) {
    const std::string at = path + ".targets[" + std::to_string(i) + "]";
    const std::size_t q = to_size((*it)[i], at);
    if (q >= qubits) fail(at, "qubit " + std::to_string(q) + " out of range", ErrorCode::kIndexOutOfRange);
    targets.push_back(q);
  }
  return targets;
}

std::size_t width_of(std::size_t dim) {
  std::size_t w = 0;
  while ((std::size_t{1} << w) < dim) ++w;
  return (std::size_t{1} << w) == dim ? w : 0;
}

ComplexMatrix named_gate(const std::string& name, const std::string& path) {
  using namespace std::complex_literals;
  const double r = 1.0 / std::numbers::sqrt2;
  if (name == "H") return ComplexMatrix{{r, r}, {r, -r}};
  if (name == "X" || name == "Y" || name == "Z") return pauli_matrix(name[0]);
  if (name == "S") return ComplexMatrix{{1.0, 0.0}, {0.0, 1i}};
  if (name == "T") return ComplexMatrix{{1.0, 0.0}, {0.0, std::polar(1.0, std::numbers::pi / 4)}};
  if (name == "CNOT") {
    return ComplexMatrix{{1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0},
                         {0.0, 0.0, 1.0, 0.0}};
  }
  if (name == "CZ") return ComplexMatrix::diagonal(std::vector<Complex>{1.0, 1.0, 1.0, -1.0});
  fail(path, "unknown gate '" + name + "'");
}

// Operator given either as {"pauli_sum": …} or {"matrix": …}, acting on
// `width` qubits.
ComplexMatrix operator_block(const json& obj, const std::string& path, std::size_t width) {
  if (obj.contains("pauli_sum")) {
    return pauli_sum_matrix(to_pauli_sum(obj["pauli_sum"], path + ".pauli_sum", width), width);
  }
  if (obj.contains("matrix")) {
    ComplexMatrix m = to_matrix(obj["matrix"], path + ".matrix");
    if (m.dim() != (std::size_t{1} << width)) {
      fail(path + ".matrix", "expected dimension " + std::to_string(std::size_t{1} << width),
           ErrorCode::kDimensionMismatch);
    }
    return m;
  }
  fail(path, "expected \"pauli_sum\" or \"matrix\"");
}

QuantumState parse_state(const json& s, std::size_t qubits) {
  const std::size_t dim = std::size_t{1} << qubits;
  if (!s.is_object()) fail("state", "expected an object");
  if (s.contains("basis")) {
    if (!s["basis"].is_string()) fail("state.basis", "expected a bit string");
    const auto bits = s["basis"].get<std::string>();
    if (bits.size() != qubits) {
      fail("state.basis", "expected " + std::to_string(qubits) + " bits", ErrorCode::kDimensionMismatch);
    }
    if (bits.find_first_not_of("01") != std::string::npos) fail("state.basis", "bits must be 0 or 1");
    return QuantumState::basis(bits);
  }
  if (s.contains("amplitudes")) {
    const json& a = s["amplitudes"];
    if (!a.is_array() || a.size() != dim) {
      fail("state.amplitudes", "expected " + std::to_string(dim) + " entries",
           ErrorCode::kDimensionMismatch);
    }
    ComplexVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      v[i] = to_complex(a[i], "state.amplitudes[" + std::to_string(i) + "]");
    }
    return QuantumState::pure(std::move(v));
  }
  if (s.contains("density")) {
    ComplexMatrix rho = to_matrix(s["density"], "state.density");
    if (rho.dim() != dim) {
      fail("state.density", "expected dimension " + std::to_string(dim), ErrorCode::kDimensionMismatch);
    }
    return QuantumState::density(std::move(rho));
  }
  fail("state", "expected \"basis\", \"amplitudes\" or \"density\"");
}

CircuitElement parse_element(const json& e, const std::string& path, std::size_t qubits) {
  if (!e.is_object()) fail(path, "expected an object");
  if (e.contains("fixed")) {
    const json& g = e["fixed"];
    const std::string at = path + ".fixed";
    if (!g.is_object()) fail(at, "expected an object");
    ComplexMatrix u;
    if (g.contains("gate")) {
      if (!g["gate"].is_string()) fail(at + ".gate", "expected a gate name");
      u = named_gate(g["gate"].get<std::string>(), at + ".gate");
    } else if (g.contains("matrix")) {
      u = to_matrix(g["matrix"], at + ".matrix");
    } else {
      fail(at, "expected \"gate\" or \"matrix\"");
    }
    const auto targets = to_targets(g, at, qubits);
    if (u.dim() != (std::size_t{1} << targets.size())) {
      fail(at + ".targets", "gate acts on " + std::to_string(width_of(u.dim())) + " qubits, " +
                                std::to_string(targets.size()) + " targets given",
           ErrorCode::kDimensionMismatch);
    }
    if (!is_unitary(u, 1e-10)) fail(at, "matrix is not unitary", ErrorCode::kNotUnitary);
    return FixedGate{embed(u, targets, qubits)};
  }
  if (e.contains("param")) {
    const json& p = e["param"];
    const std::string at = path + ".param";
    const std::size_t index = to_size(field(p, "index", at), at + ".index");
    if (index < 1) fail(at + ".index", "parameter indices start at 1");
    const auto targets = to_targets(p, at, qubits);
    const ComplexMatrix g = operator_block(field(p, "generator", at), at + ".generator", targets.size());
    HermitianOperator h;
    try {
      h = eigendecompose(g);
    } catch (const Error& err) {
      fail(at + ".generator", err.what(), err.code());
    }
    return ParameterizedGate{embed(h, targets, qubits), index - 1};
  }
  fail(path, "expected \"fixed\" or \"param\"");
}

}  // namespace

CircuitFile parse_circuit(const json& doc) {
  if (!doc.is_object()) fail("document", "expected a JSON object");
  const std::size_t version = to_size(field(doc, "version", "document"), "version");
  if (version != 1) fail("version", "only version 1 is supported");
  const std::size_t qubits = to_size(field(doc, "qubits", "document"), "qubits");
  if (qubits < 1 || qubits > CircuitLimits{}.max_qubits) {
    fail("qubits", "expected 1.." + std::to_string(CircuitLimits{}.max_qubits));
  }

  QuantumState state = parse_state(field(doc, "state", "document"), qubits);

  const json& o = field(doc, "observable", "document");
  if (!o.is_object()) fail("observable", "expected an object");
  Observable obs = o.contains("pauli_sum")
                       ? Observable::from_pauli_sum(to_pauli_sum(o["pauli_sum"], "observable.pauli_sum", qubits), qubits)
                       : Observable::from_matrix(operator_block(o, "observable", qubits));

  const json& list = field(doc, "elements", "document");
  if (!list.is_array()) fail("elements", "expected an array");
  std::vector<CircuitElement> elements;
  for (std::size_t i = 0; i < list.size(); ++i) {
    elements.push_back(parse_element(list[i], "elements[" + std::to_string(i) + "]", qubits));
  }
  try {
    return {ParameterizedCircuit(qubits, std::move(elements)), std::move(state), std::move(obs)};
  } catch (const Error& err) {
    fail("elements", err.what(), err.code());
  }
}

CircuitFile parse_circuit_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offsets are 1-based and point just past the problem
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::kInvalidArgument, "line " + std::to_string(line) + ", column " +
                                                 std::to_string(col) + ": malformed JSON");
  }
  return parse_circuit(doc);
}

CircuitFile load_circuit(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_circuit_text(buf.str());
}

}  // namespace pqc::io
