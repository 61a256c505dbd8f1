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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "qmod/circuit.hpp"
#include "qmod/gate.hpp"

namespace qmod {

/// A register to be transformed, listed MSB first.
struct FourierRegisterSpec {
  std::vector<Wire> wires;

  std::size_t width() const { return wires.size(); }

  /// Wires first, first+1, ..., first+m-1.
  static FourierRegisterSpec contiguous(std::size_t m, Wire first = 0) {
    FourierRegisterSpec s;
    for (std::size_t i = 0; i < m; ++i) s.wires.push_back(first + Wire(i));
    return s;
  }
};

namespace detail {

inline void check_register(std::span<const Wire> reg) {
  if (reg.empty()) throw std::invalid_argument("Fourier register must have at least one wire");
}

inline std::size_t span_width(std::span<const Wire> reg) {
  return reg.empty() ? 0 : *std::max_element(reg.begin(), reg.end()) + 1;
}

// Hadamard + controlled-phase ladder, then the wire-reversal swaps. Without
// the swaps the Fourier component for position i lands on reg[m-1-i].
inline std::vector<Gate> qft_gates(std::span<const Wire> reg, bool swaps = true) {
  check_register(reg);
  const std::size_t m = reg.size();
  std::vector<Gate> gates;
  gates.reserve(m * (m + 1) / 2 + m / 2);
  for (std::size_t i = 0; i < m; ++i) {
    gates.push_back(Gate::h(reg[i]));
    for (std::size_t j = i + 1; j < m; ++j) {
      const double angle = std::ldexp(2 * std::numbers::pi, -int(j - i + 1));
      gates.push_back(Gate::cphase(angle, reg[j], reg[i]));
    }
  }
  for (std::size_t i = 0; swaps && i < m / 2; ++i) {
    gates.push_back(Gate::swap(reg[i], reg[m - 1 - i]));
  }
  return gates;
}

inline void append_qft(CircuitBuilder& b, std::span<const Wire> reg,
                       bool swaps = true) {
  for (Gate& g : qft_gates(reg, swaps)) b.add(std::move(g));
}

inline void append_iqft(CircuitBuilder& b, std::span<const Wire> reg,
                        bool swaps = true) {
  std::vector<Gate> gates = qft_gates(reg, swaps);
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) b.add(it->adjoint());
}

/// Phase that adds `k` on the register wire at big-endian position `i`:
/// 2*pi*k / 2^(i+1), with k reduced modulo 2^(i+1) first.
inline std::vector<Wire> reversed_wires(std::span<const Wire> reg) {
  return std::vector<Wire>(reg.rbegin(), reg.rend());
}

inline double fourier_sum_angle(std::int64_t k, std::size_t i) {
  if (i >= 62) {
    throw std::invalid_argument("Fourier register too wide");
  }
  const std::int64_t period = std::int64_t{1} << (i + 1);
  const std::int64_t r = ((k % period) + period) % period;
  return std::ldexp(2 * std::numbers::pi * static_cast<double>(r),
                    -int(i + 1));
}

/// Sum(k) on a register held in the Fourier basis, conditioned on every wire
/// of `controls`. One phase gate per register wire.
inline void append_fourier_sum(CircuitBuilder& b, std::int64_t k,
                               std::span<const Wire> reg,
                               std::span<const Wire> controls = {}) {
  check_register(reg);
  for (std::size_t i = 0; i < reg.size(); ++i) {
    b.add(Gate::controlled_phase(fourier_sum_angle(k, i), controls, reg[i]));
  }
}

}  // namespace detail

/// Exact QFT: basis |j> maps to sum_k e^{2 pi i j k / 2^m} |k> / 2^{m/2}.
inline Circuit qft_circuit(const FourierRegisterSpec& spec) {
  detail::check_register(spec.wires);
  return Circuit(detail::span_width(spec.wires), detail::qft_gates(spec.wires),
                 "qft");
}

inline Circuit iqft_circuit(const FourierRegisterSpec& spec) {
  Circuit inv = inverse(qft_circuit(spec));
  return Circuit(inv.num_wires(),
                 std::vector<Gate>(inv.gates().begin(), inv.gates().end()),
                 "iqft");
}

/// Fourier-basis constant adder; sandwiched between qft and iqft it sends
/// |a> to |a + k mod 2^m>. Negative k is reduced modulo 2^m.
inline Circuit fourier_sum_circuit(std::int64_t k,
                                   const FourierRegisterSpec& spec) {
  detail::check_register(spec.wires);
  CircuitBuilder b(detail::span_width(spec.wires), "sum");
  detail::append_fourier_sum(b, k, spec.wires);
  return std::move(b).build();
}

}  // namespace qmod
