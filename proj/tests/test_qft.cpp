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

#include "oracles.hpp"
#include "qmod/qft.hpp"
#include "qmod/statevector.hpp"

namespace qmod {
namespace {

constexpr double kTol = 1e-10;

Circuit sum_sandwich(std::int64_t k, std::size_t m) {
  const auto reg = FourierRegisterSpec::contiguous(m);
  return compose(compose(qft_circuit(reg), fourier_sum_circuit(k, reg)),
                 iqft_circuit(reg));
}

TEST(Qft, SingleWireIsHadamard) {
  const Circuit q = qft_circuit(FourierRegisterSpec::contiguous(1));
  ASSERT_EQ(q.size(), 1u);
  EXPECT_EQ(q.gates()[0], Gate::h(0));
  const Circuit iq = iqft_circuit(FourierRegisterSpec::contiguous(1));
  ASSERT_EQ(iq.size(), 1u);
  EXPECT_EQ(iq.gates()[0], Gate::h(0));
}

TEST(Qft, ZeroInputGivesUniformSuperposition) {
  StateVector s = apply_circuit(StateVector(3), qft_circuit(FourierRegisterSpec::contiguous(3)));
  for (std::size_t k = 0; k < 8; ++k) {
    EXPECT_NEAR(std::abs(s.amplitudes()[k] - testing::Complex(1 / std::sqrt(8.0), 0)), 0.0,
                kTol);
  }
}

TEST(Qft, ColumnsMatchDenseDft) {
  for (std::size_t m = 1; m <= 6; ++m) {
    const Circuit q = qft_circuit(FourierRegisterSpec::contiguous(m));
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << m); ++j) {
      StateVector s = apply_circuit(StateVector::from_basis(m, j), q);
      const auto col = testing::dft_column(m, j);
      for (std::size_t k = 0; k < col.size(); ++k) {
        ASSERT_NEAR(std::abs(s.amplitudes()[k] - col[k]), 0.0, kTol)
            << "m=" << m << " j=" << j << " k=" << k;
      }
    }
  }
}

TEST(Qft, GateCountFormula) {
  for (std::size_t m = 1; m <= 10; ++m) {
    const Circuit q = qft_circuit(FourierRegisterSpec::contiguous(m));
    std::size_t swaps = 0;
    for (const Gate& g : q.gates()) swaps += g.kind() == GateKind::kSwap;
    EXPECT_EQ(q.size() - swaps, m * (m + 1) / 2);
    EXPECT_EQ(swaps, m / 2);
  }
}

TEST(Qft, InverseUndoesOnEveryBasisState) {
  for (std::size_t m = 1; m <= 5; ++m) {
    const auto reg = FourierRegisterSpec::contiguous(m);
    const Circuit round = compose(qft_circuit(reg), iqft_circuit(reg));
    EXPECT_EQ(iqft_circuit(reg), inverse(qft_circuit(reg)));
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << m); ++j) {
      EXPECT_NEAR(apply_circuit(StateVector::from_basis(m, j), round).probability(j), 1.0,
                  kTol);
    }
  }
}

TEST(Qft, InverseOfUniformIsZero) {
  const auto reg = FourierRegisterSpec::contiguous(3);
  StateVector u = apply_circuit(StateVector(3), Circuit(3, {Gate::h(0), Gate::h(1), Gate::h(2)}));
  EXPECT_NEAR(apply_circuit(u, iqft_circuit(reg)).probability(0), 1.0, kTol);
}

TEST(Qft, NonContiguousRegister) {
  FourierRegisterSpec reg{{4, 1, 2}};
  const Circuit q = qft_circuit(reg);
  EXPECT_EQ(q.num_wires(), 5u);
  // register value 5 = wire4:1 wire1:0 wire2:1
  StateVector s = apply_circuit(StateVector::from_basis(5, 0b00101), q);
  const auto col = testing::dft_column(3, 5);
  const Wire wires[] = {4, 1, 2};
  auto dist = register_distribution(s, wires);
  for (std::size_t k = 0; k < 8; ++k) EXPECT_NEAR(dist[k], std::norm(col[k]), kTol);
}

TEST(FourierSum, ZeroIsIdentityAngles) {
  const Circuit z = fourier_sum_circuit(0, FourierRegisterSpec::contiguous(4));
  ASSERT_EQ(z.size(), 4u);
  for (const Gate& g : z.gates()) {
    EXPECT_EQ(g.kind(), GateKind::kPhase);
    EXPECT_EQ(g.angle(), 0.0);
  }
}

TEST(FourierSum, Examples) {
  EXPECT_NEAR(apply_circuit(StateVector::from_basis(3, 6), sum_sandwich(3, 3)).probability(1),
              1.0, 1e-9);
  // -N with N = 5 is Sum(2^3 - 5)
  EXPECT_NEAR(apply_circuit(StateVector::from_basis(3, 6), sum_sandwich(-5, 3)).probability(1),
              1.0, 1e-9);
  EXPECT_EQ(fourier_sum_circuit(-5, FourierRegisterSpec::contiguous(3)),
            fourier_sum_circuit(3, FourierRegisterSpec::contiguous(3)));
}

TEST(FourierSum, ExhaustiveAdderSemantics) {
  for (std::size_t m = 1; m <= 5; ++m) {
    const std::uint64_t dim = std::uint64_t{1} << m;
    for (std::uint64_t k = 0; k < dim; ++k) {
      const Circuit c = sum_sandwich(std::int64_t(k), m);
      for (std::uint64_t a = 0; a < dim; ++a) {
        ASSERT_NEAR(apply_circuit(StateVector::from_basis(m, a), c).probability((a + k) % dim),
                    1.0, 1e-9)
            << "m=" << m << " k=" << k << " a=" << a;
      }
    }
  }
}

// Angles of Sum(k1) then Sum(k2) add per wire to those of Sum(k1 + k2),
// modulo whole turns.
TEST(FourierSum, AdditiveAndSelfCancelling) {
  const auto reg = FourierRegisterSpec::contiguous(5);
  for (std::int64_t k1 = -40; k1 <= 40; k1 += 7) {
    for (std::int64_t k2 = -33; k2 <= 33; k2 += 5) {
      const Circuit a = fourier_sum_circuit(k1, reg);
      const Circuit b = fourier_sum_circuit(k2, reg);
      const Circuit ab = fourier_sum_circuit(k1 + k2, reg);
      for (std::size_t i = 0; i < 5; ++i) {
        const double d = a.gates()[i].angle() + b.gates()[i].angle() - ab.gates()[i].angle();
        const double turns = d / (2 * std::numbers::pi);
        EXPECT_NEAR(turns, std::round(turns), 1e-12);
      }
    }
    const Circuit neg = fourier_sum_circuit(-k1, reg);
    const Circuit pos = fourier_sum_circuit(k1, reg);
    for (std::size_t i = 0; i < 5; ++i) {
      const double turns =
          (pos.gates()[i].angle() + neg.gates()[i].angle()) / (2 * std::numbers::pi);
      EXPECT_NEAR(turns, std::round(turns), 1e-12);
    }
  }
}

TEST(FourierSum, RejectsEmptyRegister) {
  EXPECT_THROW(qft_circuit(FourierRegisterSpec{}), std::invalid_argument);
  EXPECT_THROW(fourier_sum_circuit(1, FourierRegisterSpec{}), std::invalid_argument);
}

}  // namespace
}  // namespace qmod
