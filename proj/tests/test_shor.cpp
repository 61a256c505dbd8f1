// Copyright 2026 The qmod Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qmod/shor.hpp"

namespace qmod {
namespace {

PeriodFindingConfig config(std::int64_t a, std::int64_t n, std::size_t t,
                           std::uint64_t seed = 42) {
  PeriodFindingConfig cfg;
  cfg.a_base = a;
  cfg.modulus = n;
  cfg.t = t;
  cfg.shots = 1000;
  cfg.seed = seed;
  return cfg;
}

TEST(ContinuedFraction, Examples) {
  EXPECT_FALSE(continued_fraction_period(0, 8, 15).has_value());
  EXPECT_EQ(continued_fraction_period(192, 8, 15), 4);
  EXPECT_EQ(continued_fraction_period(64, 8, 15), 4);
  EXPECT_EQ(continued_fraction_period(128, 8, 15), 2);
  EXPECT_THROW(continued_fraction_period(256, 8, 15), std::invalid_argument);
}

// For every r <= N and c coprime to r, the outcome nearest c/r * 2^t
// recovers r.
TEST(ContinuedFraction, RecoversReducedFractions) {
  const std::int64_t n = 21;
  const std::size_t t = 10;  // 2^t >= 2 N^2 makes the fraction unique
  for (std::int64_t r = 2; r <= n; ++r) {
    for (std::int64_t c = 1; c < r; ++c) {
      if (std::gcd(c, r) != 1) continue;
      const auto outcome = static_cast<std::uint64_t>(
          std::llround(double(c) / double(r) * double(1u << t))) % (1u << t);
      if (outcome == 0) continue;
      EXPECT_EQ(continued_fraction_period(outcome, t, n), r) << c << "/" << r;
    }
  }
}

TEST(ContinuedFraction, RespectsDenominatorBound) {
  for (std::uint64_t x = 1; x < 256; ++x) {
    auto d = continued_fraction_period(x, 8, 15);
    if (!d) continue;
    EXPECT_LE(*d, 15);
    // some c with |x/256 - c/d| <= 1/256
    const double c = std::round(double(x) * double(*d) / 256.0);
    EXPECT_LE(std::abs(double(x) * double(*d) - c * 256.0), double(*d) + 1e-9) << x;
  }
}

TEST(PeriodFindingCircuit, Layout) {
  const auto pf = period_finding_circuit(config(7, 15, 8));
  EXPECT_EQ(pf.layout.group(Role::kDataA).size, 8u);
  EXPECT_EQ(pf.layout.num_wires(), 8u + 4u + 5u + 1u);
  EXPECT_EQ(pf.circuit.gates()[0].kind(), GateKind::kHadamard);
}

TEST(PeriodFindingCircuit, CapacityError) {
  const std::size_t saved = max_qubits();
  set_max_qubits(16);
  EXPECT_THROW(period_finding_circuit(config(7, 15, 8)), CapacityError);
  set_max_qubits(saved);
  EXPECT_THROW(period_finding_circuit(config(6, 15, 8)), NonInvertibleError);
}

TEST(CountingDistribution, SevenModFifteen) {
  const auto d = counting_distribution(config(7, 15, 8));
  double near = 0;
  for (std::uint64_t x = 0; x < 256; ++x) {
    for (std::uint64_t peak : {0u, 64u, 128u, 192u}) {
      if ((x + 256 - peak) % 256 <= 1 || (peak + 256 - x) % 256 <= 1) {
        near += d[x];
        break;
      }
    }
  }
  EXPECT_GE(near, 0.90);
  for (std::uint64_t peak : {0u, 64u, 128u, 192u}) EXPECT_NEAR(d[peak], 0.25, 1e-9);
}

TEST(CountingDistribution, BaseOnePeaksAtZero) {
  const auto d = counting_distribution(config(1, 15, 8));
  EXPECT_NEAR(d[0], 1.0, 1e-9);
}

TEST(CountingDistribution, FourModFifteen) {
  const auto d = counting_distribution(config(4, 15, 8));
  EXPECT_NEAR(d[0] + d[128], 1.0, 1e-9);
}

// Phase-estimation bound for a period that does not divide 2^t.
TEST(CountingDistribution, MassBoundWhenPeriodDoesNotDivide) {
  const std::int64_t a = 2, n = 21;  // order 6
  ASSERT_EQ(testing::brute_order(a, n), 6);
  const std::size_t t = 6;
  PeriodFindingConfig cfg = config(a, n, t);
  const auto d = counting_distribution(cfg);
  const double bound = 4.0 / (std::numbers::pi * std::numbers::pi * 6.0);
  for (int c = 0; c < 6; ++c) {
    const auto nearest = static_cast<std::uint64_t>(std::llround(c * 64.0 / 6.0)) % 64;
    EXPECT_GE(d[nearest], bound) << c;
  }
}

TEST(FindPeriod, MatchesBruteForceOrder) {
  for (std::int64_t a : {2, 4, 7, 8, 11, 13, 14}) {
    const PeriodResult r = find_period(config(a, 15, 8));
    ASSERT_TRUE(r.success) << a;
    EXPECT_EQ(*r.candidate_period, testing::brute_order(a, 15)) << a;
    std::uint64_t total = 0;
    for (auto [k, v] : r.histogram) total += v;
    EXPECT_EQ(total, 1000u);
  }
}

TEST(FindPeriod, BaseOne) {
  const PeriodResult r = find_period(config(1, 15, 8));
  ASSERT_TRUE(r.success);
  EXPECT_EQ(*r.candidate_period, 1);
}

TEST(FindPeriod, NonPowerOfTwoPeriod) {
  PeriodFindingConfig cfg = config(2, 21, 7, 3);  // 19 wires
  cfg.shots = 200;
  const PeriodResult r = find_period(cfg);
  ASSERT_TRUE(r.success);
  EXPECT_EQ(*r.candidate_period, 6);
}

TEST(FindPeriod, HistogramReproducible) {
  const PeriodResult a = find_period(config(7, 15, 8, 5));
  const PeriodResult b = find_period(config(7, 15, 8, 5));
  EXPECT_EQ(a.histogram, b.histogram);
}

TEST(FindPeriod, NarrowCountingRegister) {
  // t = n gives the 3n-wide arrangement (plus the sign ancilla)
  const PeriodResult r = find_period(config(7, 15, 4));
  EXPECT_TRUE(r.success);
  EXPECT_EQ(*r.candidate_period, 4);
}

TEST(PeriodFindingConfig, Defaults) {
  PeriodFindingConfig cfg;
  cfg.modulus = 15;
  EXPECT_EQ(cfg.counting_bits(), 8u);
  cfg.shots = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace qmod
