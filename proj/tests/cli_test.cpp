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

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "circuit_io.hpp"
#include "pqc/error.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(PQCALC_BINARY) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string circuit(const char* name) {
  return std::string(PQCALC_CIRCUITS) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / ("pqcalc_cli_test_" + name);
  std::ofstream(p) << text;
  return p.string();
}

json run_json(const std::string& args) {
  const RunResult r = run(args);
  EXPECT_EQ(r.exit_code, 0) << r.out;
  return json::parse(r.out);
}

TEST(CliTest, EvalXHalfAtZero) {
  const json out = run_json("eval --circuit " + circuit("x_half.json") + " --theta 0");
  EXPECT_DOUBLE_EQ(out["value"].get<double>(), 1.0);
}

TEST(CliTest, EvalIsBitStable) {
  const std::string args = "eval --circuit " + circuit("zz_layer.json") + " --theta 0.3,-1.1";
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(CliTest, GradXHalfAtHalfPi) {
  for (const char* method : {"fourier", "shift2"}) {
    const json out = run_json("grad --circuit " + circuit("x_half.json") +
                              " --theta 1.5707963267948966 --method " + method);
    EXPECT_NEAR(out["gradient"][0].get<double>(), -1.0, 1e-8) << method;
  }
  const json two = run_json("grad --circuit " + circuit("x_half.json") +
                            " --theta 1.5707963267948966 --method shift2");
  EXPECT_EQ(two["evaluations"].get<int>(), 2);
}

TEST(CliTest, SpectrumOfTransmon) {
  const json out = run_json("spectrum --circuit " + circuit("transmon.json"));
  const json& p = out["parameters"][0];
  EXPECT_EQ(p["D"], json({-6, -5, -4, -1, 0, 1, 4, 5, 6}));
  EXPECT_EQ(p["evaluations_needed"].get<int>(), 9);
  EXPECT_EQ(p["generic_evaluations"].get<int>(), 13);
  EXPECT_NEAR(p["alpha"].get<double>(), 0.5, 1e-12);
}

TEST(CliTest, ShiftRulesRefuseWrongSpectra) {
  RunResult r = run("grad --circuit " + circuit("transmon.json") + " --theta 0 --method shift2");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("two-point"), std::string::npos);
  r = run("grad --circuit " + circuit("x_half.json") + " --theta 0 --method shift4");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("four-point"), std::string::npos);
  const json ok = run_json("grad --circuit " + circuit("zz_layer.json") +
                           " --theta 0.2,0.4 --method fourier");
  EXPECT_EQ(ok["gradient"].size(), 2u);
}

TEST(CliTest, FourierMethods) {
  const std::string base = "fourier --circuit " + circuit("transmon.json") + " --theta 0.4 --param 1";
  const json eq = run_json(base + " --method equidistant");
  EXPECT_EQ(eq["samples_used"].get<int>(), 13);
  EXPECT_TRUE(eq["aliasing_fallback"].get<bool>());
  const json rnd = run_json(base + " --method random --seed 5");
  EXPECT_EQ(rnd["samples_used"].get<int>(), 9);
  const json gen = run_json(base + " --method generic");
  EXPECT_EQ(gen["samples_used"].get<int>(), 13);
  for (std::size_t i = 0; i < rnd["coefficients"].size(); ++i) {
    const json& c = rnd["coefficients"][i];
    const json& e = eq["coefficients"][i];
    EXPECT_EQ(c["k"], e["k"]);
    EXPECT_NEAR(c["re"].get<double>(), e["re"].get<double>(), 1e-7);
    EXPECT_NEAR(c["im"].get<double>(), e["im"].get<double>(), 1e-7);
  }
}

TEST(CliTest, TrainReachesGroundEnergy) {
  const json out = run_json("train --circuit " + circuit("ry_rz.json") + " --theta0 0,0");
  EXPECT_NEAR(out["final_energy"].get<double>(), -1.0, 1e-8);
  EXPECT_EQ(out["status"], "converged");
  EXPECT_EQ(out["baseline_evaluations"].get<int>(), 1);
  int total = 0;
  for (const auto& s : out["steps"]) total += s["samples_used"].get<int>();
  EXPECT_EQ(out["evaluations"].get<int>(), total);
}

TEST(CliTest, ShotsSwitchToSampler) {
  const json a = run_json("eval --circuit " + circuit("x_half.json") +
                          " --theta 1.0471975511965976 --shots 20000 --seed 3");
  EXPECT_NEAR(a["value"].get<double>(), 0.5, 5 * a["standard_error"].get<double>());
  const json t = run_json("train --circuit " + circuit("ry_rz.json") +
                          " --theta0 0.3,0 --shots 100000 --seed 1 --max-sweeps 3");
  EXPECT_LT(t["final_energy"].get<double>(), -0.98);
}

TEST(CliTest, MalformedFileNamesTheLine) {
  const std::string path = write_temp("bad.json", "{\n  \"version\": 1,\n  \"qubits\": ,\n}\n");
  const RunResult r = run("eval --circuit " + path + " --theta 0");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("line 3"), std::string::npos) << r.out;
}

TEST(CliTest, UnknownGateAndDimensionErrors) {
  const std::string gate = write_temp("gate.json", R"({"version": 1, "qubits": 1,
    "state": {"basis": "0"}, "observable": {"pauli_sum": [{"coeff": 1, "word": "Z"}]},
    "elements": [{"fixed": {"gate": "SWAP", "targets": [0]}}]})");
  RunResult r = run("eval --circuit " + gate + " --theta ''");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("elements[0].fixed.gate"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("unknown gate"), std::string::npos);

  const std::string dim = write_temp("dim.json", R"({"version": 1, "qubits": 2,
    "state": {"basis": "0"}, "observable": {"pauli_sum": [{"coeff": 1, "word": "ZZ"}]},
    "elements": []})");
  r = run("eval --circuit " + dim + " --theta ''");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("state.basis"), std::string::npos) << r.out;
}

TEST(CliTest, IncommensurableGeneratorIsANumericalFailure) {
  const std::string path = write_temp("irrational.json", R"({"version": 1, "qubits": 2,
    "state": {"basis": "00"}, "observable": {"pauli_sum": [{"coeff": 1, "word": "ZI"}]},
    "elements": [{"param": {"index": 1, "generator": {"pauli_sum": [
      {"coeff": 1.0, "word": "XI"}, {"coeff": -1.0, "word": "ZX"}, {"coeff": 0.25, "word": "IX"}]}}}]})");
  const RunResult r = run("spectrum --circuit " + path);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.out.find("NotCommensurable"), std::string::npos) << r.out;
}

TEST(CliTest, BadFlagsAreInputErrors) {
  EXPECT_EQ(run("eval --circuit " + circuit("x_half.json") + " --theta abc").exit_code, 1);
  EXPECT_EQ(run("frobnicate").exit_code, 1);
  EXPECT_EQ(run("fourier --circuit " + circuit("x_half.json") + " --theta 0 --param 3").exit_code, 1);
  EXPECT_EQ(run("--help").exit_code, 0);
}

TEST(CircuitIoTest, ParsesAllStateKinds) {
  const auto f = pqc::io::parse_circuit_text(R"({"version": 1, "qubits": 1,
    "state": {"density": [[0.5, 0.5], [0.5, 0.5]]},
    "observable": {"matrix": [[0, [0, -1]], [[0, 1], 0]]},
    "elements": [{"fixed": {"matrix": [[0, 1], [1, 0]], "targets": [0]}}]})");
  EXPECT_FALSE(f.state.is_pure());
  EXPECT_EQ(f.circuit.num_params(), 0u);
  EXPECT_EQ(f.observable.dim(), 2u);
}

TEST(CircuitIoTest, RejectsNonUnitaryAndSparseIndices) {
  EXPECT_THROW(pqc::io::parse_circuit_text(R"({"version": 1, "qubits": 1,
    "state": {"basis": "0"}, "observable": {"pauli_sum": [{"coeff": 1, "word": "Z"}]},
    "elements": [{"fixed": {"matrix": [[1, 1], [0, 1]]}}]})"),
               pqc::Error);
  try {
    pqc::io::parse_circuit_text(R"({"version": 1, "qubits": 1,
      "state": {"basis": "0"}, "observable": {"pauli_sum": [{"coeff": 1, "word": "Z"}]},
      "elements": [{"param": {"index": 2, "generator": {"pauli_sum": [{"coeff": 0.5, "word": "X"}]}}}]})");
    FAIL();
  } catch (const pqc::Error& e) {
    EXPECT_NE(std::string(e.what()).find("elements"), std::string::npos) << e.what();
  }
}

}  // namespace
