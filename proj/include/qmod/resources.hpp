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
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmod/circuit.hpp"
#include "qmod/layout.hpp"

namespace qmod {

struct ResourceReport {
  std::size_t total_qubits = 0;
  std::size_t ancilla_qubits = 0;
  std::map<std::string, std::size_t> gate_counts;  // keyed by mnemonic
  std::size_t depth = 0;

  std::size_t total_gates() const {
    std::size_t n = 0;
    for (const auto& [kind, count] : gate_counts) n += count;
    return n;
  }
};

/// ASAP layering: each gate lands one layer after the latest gate on any of
/// its wires. Every gate costs one layer regardless of its control count.
inline std::size_t asap_depth(const Circuit& c) {
  std::vector<std::size_t> finish(c.num_wires(), 0);
  std::size_t depth = 0;
  for (const Gate& g : c.gates()) {
    std::size_t layer = 0;
    for (Wire w : g.wires()) layer = std::max(layer, finish[w]);
    ++layer;
    for (Wire w : g.wires()) finish[w] = layer;
    depth = std::max(depth, layer);
  }
  return depth;
}

inline ResourceReport resource_report(const Circuit& c,
                                      const RegisterLayout& layout) {
  if (layout.num_wires() != c.num_wires()) {
    throw std::invalid_argument("layout covers " +
                                std::to_string(layout.num_wires()) +
                                " wires but circuit has " +
                                std::to_string(c.num_wires()));
  }
  ResourceReport r;
  r.total_qubits = c.num_wires();
  r.ancilla_qubits = layout.ancilla_count();
  for (GateKind k : kAllGateKinds) r.gate_counts[std::string(mnemonic(k))] = 0;
  for (const Gate& g : c.gates()) ++r.gate_counts[std::string(mnemonic(g.kind()))];
  r.depth = asap_depth(c);
  return r;
}

/// Least-squares slope of log(y) against log(x).
inline double loglog_slope(std::span<const double> xs,
                           std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw std::invalid_argument("slope fit needs at least two paired points");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] <= 0 || ys[i] <= 0) {
      throw std::invalid_argument("log-log fit needs positive values");
    }
    const double lx = std::log(xs[i]), ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("degenerate x values in fit");
  return (n * sxy - sx * sy) / denom;
}

}  // namespace qmod
