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
#include <atomic>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmod/circuit.hpp"
#include "qmod/errors.hpp"
#include "qmod/gate.hpp"

namespace qmod {

inline constexpr std::size_t kDefaultMaxQubits = 26;

namespace detail {
inline std::atomic<std::size_t>& max_qubits_setting() {
  static std::atomic<std::size_t> value{kDefaultMaxQubits};
  return value;
}
}  // namespace detail

/// Largest register the simulator will allocate (2^n amplitudes).
inline std::size_t max_qubits() { return detail::max_qubits_setting().load(); }
inline void set_max_qubits(std::size_t n) {
  if (n == 0 || n > 40) throw std::invalid_argument("max qubits must be in [1, 40]");
  detail::max_qubits_setting().store(n);
}

/// Dense state of n qubits. Basis index b encodes |q0 q1 ... q(n-1)> with q0
/// the most significant bit.
class StateVector {
 public:
  using Amplitude = std::complex<double>;

  /// |0...0>.
  explicit StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
    check_capacity(num_qubits);
    amps_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
  }

  static StateVector from_basis(std::size_t num_qubits,
                                std::uint64_t basis_index) {
    if (num_qubits < 64 && basis_index >> num_qubits != 0) {
      throw std::invalid_argument("basis index " +
                                  std::to_string(basis_index) +
                                  " out of range for " +
                                  std::to_string(num_qubits) + " qubits");
    }
    StateVector s(num_qubits);
    s.amps_[0] = 0.0;
    s.amps_[basis_index] = 1.0;
    return s;
  }

  /// Takes ownership of `amps`; the length must be 2^n and the norm 1.
  static StateVector from_amplitudes(std::size_t num_qubits,
                                     std::vector<Amplitude> amps) {
    check_capacity(num_qubits);
    if (amps.size() != (std::size_t{1} << num_qubits)) {
      throw std::invalid_argument("amplitude count must be 2^num_qubits");
    }
    StateVector s;
    s.num_qubits_ = num_qubits;
    s.amps_ = std::move(amps);
    if (std::abs(s.norm_squared() - 1.0) > 1e-9) {
      throw std::invalid_argument("amplitudes are not normalized");
    }
    return s;
  }

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  Amplitude amplitude(std::uint64_t i) const { return amps_.at(i); }
  double probability(std::uint64_t i) const { return std::norm(amps_.at(i)); }

  double norm_squared() const {
    double total = 0.0;
    for (const Amplitude& a : amps_) total += std::norm(a);
    return total;
  }

  /// Basis-index bit for a wire.
  std::uint64_t bit(Wire w) const {
    return std::uint64_t{1} << (num_qubits_ - 1 - w);
  }

  void apply(const Gate& g) {
    std::uint64_t cmask = 0;
    for (Wire w : g.wires()) {
      if (w >= num_qubits_) {
        throw std::invalid_argument("gate wire " + std::to_string(w) +
                                    " out of range for " +
                                    std::to_string(num_qubits_) + " qubits");
      }
    }
    for (Wire w : g.controls()) cmask |= bit(w);
    switch (g.kind()) {
      case GateKind::kHadamard: {
        const std::uint64_t t = bit(g.target());
        constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
        for_each_index(t, 0, [&](std::uint64_t i) {
          Amplitude a = amps_[i], b = amps_[i | t];
          amps_[i] = (a + b) * kInvSqrt2;
          amps_[i | t] = (a - b) * kInvSqrt2;
        });
        break;
      }
      case GateKind::kPauliX:
      case GateKind::kControlledX:
      case GateKind::kMultiControlledX: {
        const std::uint64_t t = bit(g.target());
        for_each_index(cmask | t, cmask,
                       [&](std::uint64_t i) { std::swap(amps_[i], amps_[i | t]); });
        break;
      }
      case GateKind::kPhase:
      case GateKind::kControlledPhase:
      case GateKind::kMultiControlledPhase: {
        const std::uint64_t m = cmask | bit(g.target());
        const Amplitude factor = std::polar(1.0, g.angle());
        for_each_index(m, m, [&](std::uint64_t i) { amps_[i] *= factor; });
        break;
      }
      case GateKind::kSwap: {
        const std::uint64_t a = bit(g.wires()[0]), b = bit(g.wires()[1]);
        for_each_index(a | b, a, [&](std::uint64_t i) {
          std::swap(amps_[i], amps_[i ^ a ^ b]);
        });
        break;
      }
    }
  }

  void apply(const Circuit& c) {
    if (c.num_wires() != num_qubits_) {
      throw std::invalid_argument("circuit width " +
                                  std::to_string(c.num_wires()) +
                                  " does not match state width " +
                                  std::to_string(num_qubits_));
    }
    for (const Gate& g : c.gates()) apply(g);
  }

  /// Bitwise equality of amplitude arrays.
  friend bool operator==(const StateVector& a, const StateVector& b) {
    return a.num_qubits_ == b.num_qubits_ && a.amps_ == b.amps_;
  }

 private:
  StateVector() = default;

  static void check_capacity(std::size_t n) {
    if (n > max_qubits()) {
      throw CapacityError(std::to_string(n) +
                          " qubits exceed the simulator ceiling of " +
                          std::to_string(max_qubits()));
    }
  }

  // Calls f(i) for every index whose bits under `fixed_mask` equal
  // `fixed_value`, in increasing order.
  template <typename F>
  void for_each_index(std::uint64_t fixed_mask, std::uint64_t fixed_value,
                      F&& f) const {
    int positions[64];
    int k = 0;
    for (std::uint64_t m = fixed_mask; m != 0; m &= m - 1) {
      positions[k++] = std::countr_zero(m);
    }
    const std::uint64_t count = std::uint64_t{1} << (num_qubits_ - k);
    for (std::uint64_t j = 0; j < count; ++j) {
      std::uint64_t i = j;
      for (int p = 0; p < k; ++p) {
        const int pos = positions[p];
        const std::uint64_t low = i & ((std::uint64_t{1} << pos) - 1);
        i = ((i >> pos) << (pos + 1)) | low;
      }
      f(i | fixed_value);
    }
  }

  std::size_t num_qubits_ = 0;
  std::vector<Amplitude> amps_;
};

inline StateVector apply_gate(StateVector state, const Gate& g) {
  state.apply(g);
  return state;
}

inline StateVector apply_circuit(StateVector state, const Circuit& c) {
  state.apply(c);
  return state;
}

/// |<a|b>|^2.
inline double fidelity(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("fidelity: qubit count mismatch");
  }
  std::complex<double> overlap{0.0, 0.0};
  auto x = a.amplitudes(), y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) overlap += std::conj(x[i]) * y[i];
  return std::clamp(std::norm(overlap), 0.0, 1.0);
}

struct MeasurementCounts {
  std::uint64_t shots = 0;
  std::map<std::uint64_t, std::uint64_t> counts;
};

/// Independent computational-basis draws, in draw order. The generator is
/// mt19937_64 seeded with `seed`; the uniform variate uses the top 53 bits so
/// the sequence depends only on the engine.
inline std::vector<std::uint64_t> sample_outcomes(const StateVector& state,
                                                  std::uint64_t shots,
                                                  std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("shots must be at least 1");
  auto amps = state.amplitudes();
  std::vector<double> cumulative(amps.size());
  double total = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    total += std::norm(amps[i]);
    cumulative[i] = total;
  }
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> out;
  out.reserve(shots);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - cumulative.begin());
    if (idx >= amps.size()) {
      // u landed on the rounding slack past the last positive entry.
      idx = amps.size() - 1;
      while (idx > 0 && std::norm(amps[idx]) == 0.0) --idx;
    }
    out.push_back(idx);
  }
  return out;
}

inline MeasurementCounts sample(const StateVector& state, std::uint64_t shots,
                                std::uint64_t seed) {
  MeasurementCounts result;
  result.shots = shots;
  for (std::uint64_t outcome : sample_outcomes(state, shots, seed)) {
    ++result.counts[outcome];
  }
  return result;
}

/// Probability of each value of the register formed by `wires` (first wire
/// is the register's MSB).
inline std::vector<double> register_distribution(const StateVector& state,
                                                 std::span<const Wire> wires) {
  std::vector<double> dist(std::size_t{1} << wires.size(), 0.0);
  auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p == 0.0) continue;
    std::uint64_t v = 0;
    for (Wire w : wires) v = (v << 1) | ((i & state.bit(w)) ? 1 : 0);
    dist[v] += p;
  }
  return dist;
}

}  // namespace qmod
