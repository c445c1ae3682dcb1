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

#include "pqc/fourier.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pqc/error.hpp"
#include "pqc/spectrum.hpp"
#include "test_support.hpp"

namespace pqc {
namespace {

using testing::kPi;

FrequencySet window(std::int64_t n) {
  std::vector<std::int64_t> levels;
  for (std::int64_t k = 0; k <= n; ++k) levels.push_back(k);
  return frequencies_from_levels(1.0, levels);
}

void expect_coeff(const TrigPolynomial& p, std::int64_t k, Complex want, double tol) {
  EXPECT_NEAR(p.coefficient(k).real(), want.real(), tol) << "k=" << k;
  EXPECT_NEAR(p.coefficient(k).imag(), want.imag(), tol) << "k=" << k;
}

// f along θ for the transmon generator sandwiched between random layers.
struct TransmonFixture {
  std::mt19937_64 rng{77};
  HermitianOperator h = eigendecompose(testing::transmon_matrix(0.75, 0.25));
  FrequencySet freqs = difference_set(h);
  ParameterizedCircuit circuit = testing::sandwich_circuit(h, 2, rng);
  QuantumState state = testing::random_pure_state(4, rng);
  Observable obs = testing::random_observable(4, rng);
  UnivariateFunction f = restrict(circuit, std::vector<double>{0.0}, state, obs, 0);
};

TEST(ReconstructGenericTest, Cosine) {
  const double pts[] = {0.0, 2 * kPi / 3, 4 * kPi / 3};
  const auto r = reconstruct_generic([](double t) { return std::cos(t); }, 1, pts);
  expect_coeff(r.poly, -1, 0.5, 1e-14);
  expect_coeff(r.poly, 1, 0.5, 1e-14);
  expect_coeff(r.poly, 0, 0.0, 1e-14);
  EXPECT_EQ(r.samples_used, 3u);
}

TEST(ReconstructGenericTest, ConstantUsesOnePoint) {
  const double pts[] = {1.3};
  const auto r = reconstruct_generic([](double) { return 0.7; }, 0, pts);
  EXPECT_EQ(r.samples_used, 1u);
  expect_coeff(r.poly, 0, 0.7, 1e-15);
}

TEST(ReconstructGenericTest, SineOfTwoT) {
  const auto pts = equispaced_points(5);
  const auto r = reconstruct_generic([](double t) { return std::sin(2 * t); }, 2, pts);
  expect_coeff(r.poly, 2, Complex{0, -0.5}, 1e-14);
  expect_coeff(r.poly, -2, Complex{0, 0.5}, 1e-14);
  for (std::int64_t k = -1; k <= 1; ++k) expect_coeff(r.poly, k, 0.0, 1e-14);
  EXPECT_NEAR(r.poly.sin_coefficient(2), 1.0, 1e-14);
}

TEST(ReconstructGenericTest, RejectsBadPointSets) {
  const auto f = [](double t) { return std::cos(t); };
  const double two[] = {0.0, 1.0};
  EXPECT_THROW(reconstruct_generic(f, 1, two), Error);
  const double dup[] = {0.0, 1.0, 1.0};
  try {
    reconstruct_generic(f, 1, dup);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicatePoints);
  }
  const double outside[] = {0.0, 1.0, 7.0};
  EXPECT_THROW(reconstruct_generic(f, 1, outside), Error);
}

TEST(ReconstructEquidistantTest, Cosine) {
  testing::CountingFunction f{[](double t) { return std::cos(t); }};
  const auto r = reconstruct_equidistant(f, window(1));
  EXPECT_EQ(f.calls(), 3u);
  EXPECT_EQ(r.samples_used, 3u);
  EXPECT_NEAR(r.points[1], 2 * kPi / 3, 1e-15);
  EXPECT_NEAR(r.points[2], 4 * kPi / 3, 1e-15);
  expect_coeff(r.poly, 1, 0.5, 1e-14);
  expect_coeff(r.poly, -1, 0.5, 1e-14);
  EXPECT_FALSE(r.aliasing_fallback);
}

TEST(ReconstructEquidistantTest, ConstantUsesOneSample) {
  testing::CountingFunction f{[](double) { return -0.25; }};
  const auto r = reconstruct_equidistant(f, window(0));
  EXPECT_EQ(f.calls(), 1u);
  expect_coeff(r.poly, 0, -0.25, 1e-15);
}

TEST(ReconstructEquidistantTest, OffsetDoesNotChangeResult) {
  const auto f = [](double t) { return 0.3 + std::sin(t) - 0.5 * std::cos(2 * t); };
  const auto base = reconstruct_equidistant(f, window(2), 0);
  for (std::int64_t a : {1, 3, -2, 17}) {
    const auto r = reconstruct_equidistant(f, window(2), a);
    for (std::int64_t k = -2; k <= 2; ++k) {
      expect_coeff(r.poly, k, base.poly.coefficient(k), 1e-13);
    }
  }
}

TEST(ReconstructEquidistantTest, KnownValueAtZeroSavesOneCall) {
  const auto inner = [](double t) { return std::cos(t) + 0.1; };
  testing::CountingFunction f{inner};
  const auto r = reconstruct_equidistant(f, window(1), 0, inner(0.0));
  EXPECT_EQ(f.calls(), 2u);
  EXPECT_EQ(r.samples_used, 2u);
  expect_coeff(r.poly, 0, 0.1, 1e-14);
  // the grid is taken mod 2π, so every integer offset keeps a sample at 0
  testing::CountingFunction g{inner};
  const auto shifted = reconstruct_equidistant(g, window(1), 1, inner(0.0));
  EXPECT_EQ(g.calls(), 2u);
  expect_coeff(shifted.poly, 1, 0.5, 1e-14);
}

TEST(ReconstructEquidistantTest, TransmonAliasesAndFallsBack) {
  TransmonFixture fx;
  testing::CountingFunction f{fx.f};
  const auto r = reconstruct_equidistant(f, fx.freqs);
  // 4 ≡ −5 mod 9 makes the 9-point system singular; 13 points are used
  EXPECT_TRUE(r.aliasing_fallback);
  EXPECT_EQ(f.calls(), 13u);
  EXPECT_EQ(r.poly.frequencies, fx.freqs.differences);

  const auto oracle = reconstruct_generic(fx.f, 6, equispaced_points(13, 0), fx.freqs.alpha);
  const double period = 2 * kPi / fx.freqs.alpha;
  for (int i = 0; i < 1000; ++i) {
    const double t = period * i / 1000.0;
    EXPECT_NEAR(eval_trig(r.poly, t), eval_trig(oracle.poly, t), 1e-7);
    EXPECT_NEAR(eval_trig(r.poly, t), fx.f(t), 1e-7);
  }
}

TEST(ReconstructRandomTest, TransmonUsesNinePoints) {
  TransmonFixture fx;
  testing::CountingFunction f{fx.f};
  const auto r = reconstruct_random(f, fx.freqs, 3);
  EXPECT_EQ(f.calls(), 9u);
  const double period = 2 * kPi / fx.freqs.alpha;
  for (int i = 0; i < 1000; ++i) {
    const double t = period * i / 1000.0;
    EXPECT_NEAR(eval_trig(r.poly, t), fx.f(t), 1e-7);
  }
}

TEST(ReconstructRandomTest, CosineAnySeed) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = reconstruct_random([](double t) { return std::cos(t); }, window(1), seed);
    expect_coeff(r.poly, 1, 0.5, 1e-7);
    expect_coeff(r.poly, -1, 0.5, 1e-7);
    expect_coeff(r.poly, 0, 0.0, 1e-7);
  }
}

TEST(ReconstructRandomTest, ConstantSinglePoint) {
  testing::CountingFunction f{[](double) { return 4.5; }};
  const auto r = reconstruct_random(f, window(0), 11);
  EXPECT_EQ(f.calls(), 1u);
  ASSERT_EQ(r.points.size(), 1u);
  expect_coeff(r.poly, 0, 4.5, 1e-15);
}

TEST(ReconstructRandomTest, SeedIsDeterministic) {
  const auto f = [](double t) { return std::sin(t) + std::cos(2 * t); };
  const auto a = reconstruct_random(f, window(2), 99);
  const auto b = reconstruct_random(f, window(2), 99);
  EXPECT_EQ(a.points, b.points);
}

TEST(ReconstructRandomTest, AgreesWithEquidistantOnZSumCircuit) {
  std::mt19937_64 rng(8);
  const auto h = testing::zz_sum_half();
  const auto freqs = difference_set(h);
  const auto circuit = testing::sandwich_circuit(h, 2, rng);
  const auto state = testing::random_pure_state(4, rng);
  const auto obs = testing::random_observable(4, rng);
  const auto f = restrict(circuit, std::vector<double>{0.4}, state, obs, 0);
  const auto ref = reconstruct_equidistant(f, freqs);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto r = reconstruct_random(f, freqs, seed);
    EXPECT_LE(r.redraws, kMaxRedraws);
    for (std::int64_t k = -2; k <= 2; ++k) {
      expect_coeff(r.poly, k, ref.poly.coefficient(k), 1e-7);
    }
  }
}

TEST(EvalTrigTest, Basics) {
  TrigPolynomial one{{0}, {1.0}, 1.0};
  EXPECT_DOUBLE_EQ(eval_trig(one, 2.7), 1.0);
  EXPECT_DOUBLE_EQ(derivative_trig(one, 2.7), 0.0);
  TrigPolynomial cosine{{-1, 0, 1}, {0.5, 0.0, 0.5}, 1.0};
  EXPECT_NEAR(eval_trig(cosine, kPi), -1.0, 1e-15);
  EXPECT_NEAR(derivative_trig(cosine, 0.0), 0.0, 1e-15);
  EXPECT_NEAR(derivative_trig(cosine, kPi / 2), -1.0, 1e-15);
}

TEST(EvalTrigTest, ImaginaryResidualThrows) {
  TrigPolynomial bad{{0, 1}, {0.0, 1.0}, 1.0};
  try {
    eval_trig(bad, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kImaginaryResidual);
  }
}

TEST(EvalTrigTest, ScaledAxis) {
  // cos(2t) stored on the integer axis with alpha 2
  TrigPolynomial p{{-1, 0, 1}, {0.5, 0.0, 0.5}, 2.0};
  EXPECT_NEAR(p.period(), kPi, 1e-15);
  for (double t : {0.1, 0.9, 2.0}) {
    EXPECT_NEAR(eval_trig(p, t), std::cos(2 * t), 1e-14);
    EXPECT_NEAR(derivative_trig(p, t), -2 * std::sin(2 * t), 1e-14);
  }
}

TEST(EvalTrigTest, MatchesSimulatorOnRandomQubit) {
  std::mt19937_64 rng(13);
  const auto h = testing::pauli_half('Y', 0, 1);
  const auto circuit = testing::sandwich_circuit(h, 1, rng);
  const auto state = testing::random_mixed_state(2, rng);
  const auto obs = testing::random_observable(2, rng);
  const auto f = restrict(circuit, std::vector<double>{0.0}, state, obs, 0);
  const auto r = reconstruct_equidistant(f, difference_set(h));
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 50; ++i) {
    const double t = u(rng);
    EXPECT_NEAR(eval_trig(r.poly, t), f(t), 1e-7);
  }
}

TEST(DerivativeTrigTest, MatchesFiniteDifferencesOnTwoQubits) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    const auto circuit = testing::random_pauli_circuit(2, 3, rng);
    const auto state = testing::random_pure_state(4, rng);
    const auto obs = testing::random_observable(4, rng);
    const auto theta = testing::random_angles(3, rng);
    const std::size_t j = trial % 3;
    const auto f = restrict(circuit, theta, state, obs, j);
    const auto r = reconstruct_equidistant(f, parameter_frequencies(circuit, j));
    std::uniform_real_distribution<double> u(-kPi, kPi);
    for (int i = 0; i < 20; ++i) {
      const double t = u(rng);
      EXPECT_NEAR(derivative_trig(r.poly, t), testing::central_difference(f, t), 1e-6);
    }
  }
}

TEST(FourierPropertyTest, SupportStaysInsideD) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t qubits = 1 + trial % 2;
    const auto circuit = testing::random_pauli_circuit(qubits, 2, rng);
    const std::size_t dim = std::size_t{1} << qubits;
    const auto state = testing::random_pure_state(dim, rng);
    const auto obs = testing::random_observable(dim, rng);
    const auto theta = testing::random_angles(2, rng);
    const auto freqs = parameter_frequencies(circuit, 0);
    const auto f = restrict(circuit, theta, state, obs, 0);
    const std::int64_t wide = freqs.max_freq() + 3;
    const auto r = reconstruct_generic(f, wide, equispaced_points(2 * wide + 1, 0), freqs.alpha);
    for (std::int64_t k = -wide; k <= wide; ++k) {
      if (!freqs.contains(k)) EXPECT_LE(std::abs(r.poly.coefficient(k)), 1e-8) << "k=" << k;
    }
  }
}

TEST(FourierPropertyTest, MethodsAgree) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto circuit = testing::sandwich_circuit(testing::zz_sum_half(), 2, rng);
    const auto state = testing::random_pure_state(4, rng);
    const auto obs = testing::random_observable(4, rng);
    const auto freqs = parameter_frequencies(circuit, 0);
    const auto f = restrict(circuit, std::vector<double>{0.0}, state, obs, 0);
    std::uniform_real_distribution<double> u(0.0, 2 * kPi);
    std::vector<double> pts(5);
    for (auto& p : pts) p = u(rng);
    const auto g = reconstruct_generic(f, 2, pts);
    const auto e = reconstruct_equidistant(f, freqs);
    const auto r = reconstruct_random(f, freqs, trial);
    if (g.ill_conditioned) continue;
    for (std::int64_t k = -2; k <= 2; ++k) {
      expect_coeff(g.poly, k, e.poly.coefficient(k), 1e-7);
      expect_coeff(r.poly, k, e.poly.coefficient(k), 1e-7);
    }
  }
}

TEST(FourierPropertyTest, DistinctPointsGiveFiniteCondition) {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(0.0, 2 * kPi);
  const std::vector<std::int64_t> ks = {-2, -1, 0, 1, 2};
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> pts(5);
    for (auto& p : pts) p = u(rng);
    EXPECT_TRUE(std::isfinite(condition_number(fourier_matrix(ks, pts))));
  }
}

TEST(FourierPropertyTest, MeanEqualsConstantTerm) {
  std::mt19937_64 rng(61);
  const auto circuit = testing::random_pauli_circuit(2, 2, rng);
  const auto state = testing::random_pure_state(4, rng);
  const auto obs = testing::random_observable(4, rng);
  const auto theta = testing::random_angles(2, rng);
  const auto freqs = parameter_frequencies(circuit, 1);
  const auto f = restrict(circuit, theta, state, obs, 1);
  const auto r = reconstruct_equidistant(f, freqs);
  const double period = 2 * kPi / freqs.alpha;
  double mean = 0.0;
  for (int i = 0; i < 4096; ++i) mean += f(period * i / 4096.0);
  mean /= 4096.0;
  EXPECT_NEAR(mean, r.poly.constant_term(), 1e-6);
}

TEST(SymmetrizeTest, EnforcesHermitianCoefficients) {
  TrigPolynomial p{{-1, 0, 1}, {Complex{1.0, 0.2}, Complex{0.5, 0.1}, Complex{0.8, 0.4}}, 1.0};
  symmetrize(p);
  EXPECT_EQ(p.coefficient(1), std::conj(p.coefficient(-1)));
  EXPECT_DOUBLE_EQ(p.coefficient(0).imag(), 0.0);
  EXPECT_NEAR(p.coefficient(1).real(), 0.9, 1e-15);
  EXPECT_NEAR(p.coefficient(1).imag(), 0.1, 1e-15);
}

}  // namespace
}  // namespace pqc
