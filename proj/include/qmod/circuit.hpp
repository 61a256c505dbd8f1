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
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qmod/gate.hpp"

namespace qmod {

/// An ordered gate sequence over a fixed number of wires. Immutable once
/// built; use CircuitBuilder to assemble one.
class Circuit {
 public:
  Circuit() = default;

  explicit Circuit(std::size_t num_wires, std::vector<Gate> gates = {},
                   std::string label = {})
      : num_wires_(num_wires), gates_(std::move(gates)),
        label_(std::move(label)) {
    for (const Gate& g : gates_) {
      for (Wire w : g.wires()) {
        if (w >= num_wires_) {
          throw std::invalid_argument(
              "gate wire " + std::to_string(w) + " out of range for " +
              std::to_string(num_wires_) + "-wire circuit");
        }
      }
    }
  }

  std::size_t num_wires() const { return num_wires_; }
  std::span<const Gate> gates() const { return gates_; }
  const std::string& label() const { return label_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Gate-for-gate equality; labels are ignored.
  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.num_wires_ == b.num_wires_ && a.gates_ == b.gates_;
  }

 private:
  std::size_t num_wires_ = 0;
  std::vector<Gate> gates_;
  std::string label_;
};

class CircuitBuilder {
 public:
  explicit CircuitBuilder(std::size_t num_wires, std::string label = {})
      : num_wires_(num_wires), label_(std::move(label)) {}

  CircuitBuilder& add(Gate g) {
    for (Wire w : g.wires()) {
      if (w >= num_wires_) {
        throw std::invalid_argument("gate wire " + std::to_string(w) +
                                    " out of range for " +
                                    std::to_string(num_wires_) +
                                    "-wire builder");
      }
    }
    gates_.push_back(std::move(g));
    return *this;
  }

  /// Appends every gate of `c`, which may be narrower than the builder.
  CircuitBuilder& append(const Circuit& c) {
    if (c.num_wires() > num_wires_) {
      throw std::invalid_argument("appended circuit is wider than builder");
    }
    gates_.insert(gates_.end(), c.gates().begin(), c.gates().end());
    return *this;
  }

  std::size_t num_wires() const { return num_wires_; }
  std::size_t size() const { return gates_.size(); }

  Circuit build() const& { return Circuit(num_wires_, gates_, label_); }
  Circuit build() && {
    return Circuit(num_wires_, std::move(gates_), std::move(label_));
  }

 private:
  std::size_t num_wires_;
  std::string label_;
  std::vector<Gate> gates_;
};

/// Reversed sequence of adjoints.
inline Circuit inverse(const Circuit& c) {
  std::vector<Gate> gates;
  gates.reserve(c.size());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    gates.push_back(it->adjoint());
  }
  return Circuit(c.num_wires(), std::move(gates), c.label());
}

/// `b` after `a`.
inline Circuit compose(const Circuit& a, const Circuit& b) {
  if (a.num_wires() != b.num_wires()) {
    throw std::invalid_argument("compose: width mismatch (" +
                                std::to_string(a.num_wires()) + " vs " +
                                std::to_string(b.num_wires()) + ")");
  }
  std::vector<Gate> gates(a.gates().begin(), a.gates().end());
  gates.insert(gates.end(), b.gates().begin(), b.gates().end());
  return Circuit(a.num_wires(), std::move(gates), a.label());
}

namespace detail {

// Ry(-pi/4) up to global phase, as S.H.P(-pi/4).H.S^dag. Conjugating X by it
// gives H, so a controlled Hadamard is V.CX.V^dag. Gates are in time order.
inline void append_ry_quarter(std::vector<Gate>& out, Wire t, bool adjoint) {
  constexpr double kHalfPi = std::numbers::pi / 2;
  constexpr double kTheta = -std::numbers::pi / 4;
  out.push_back(Gate::phase(-kHalfPi, t));
  out.push_back(Gate::h(t));
  out.push_back(Gate::phase(adjoint ? -kTheta : kTheta, t));
  out.push_back(Gate::h(t));
  out.push_back(Gate::phase(kHalfPi, t));
}

}  // namespace detail

/// Adds `control` to every gate of `c` after shifting c's wires by `offset`.
/// Diagonal and X-type gates gain a control directly; Hadamard and SWAP are
/// expanded into exact equivalents built from controllable gates.
inline Circuit controlled(const Circuit& c, Wire control, Wire offset = 0) {
  std::size_t width = std::max<std::size_t>(c.num_wires() + offset,
                                            static_cast<std::size_t>(control) + 1);
  for (const Gate& g : c.gates()) {
    for (Wire w : g.wires()) {
      if (w + offset == control) {
        throw std::invalid_argument("control wire " + std::to_string(control) +
                                    " collides with circuit wires");
      }
    }
  }
  std::vector<Gate> gates;
  gates.reserve(c.size());
  auto shift = [offset](Wire w) { return w + offset; };
  for (const Gate& original : c.gates()) {
    Gate g = original.remapped(shift);
    std::vector<Wire> controls{control};
    controls.insert(controls.end(), g.controls().begin(), g.controls().end());
    switch (g.kind()) {
      case GateKind::kPhase:
      case GateKind::kControlledPhase:
      case GateKind::kMultiControlledPhase:
        gates.push_back(Gate::controlled_phase(g.angle(), controls, g.target()));
        break;
      case GateKind::kPauliX:
      case GateKind::kControlledX:
      case GateKind::kMultiControlledX:
        gates.push_back(Gate::controlled_x(controls, g.target()));
        break;
      case GateKind::kHadamard: {
        Wire t = g.target();
        detail::append_ry_quarter(gates, t, /*adjoint=*/true);
        gates.push_back(Gate::cx(control, t));
        detail::append_ry_quarter(gates, t, /*adjoint=*/false);
        break;
      }
      case GateKind::kSwap: {
        Wire a = g.wires()[0], b = g.wires()[1];
        std::vector<Wire> ctrl_a{control, a};
        gates.push_back(Gate::cx(b, a));
        gates.push_back(Gate::controlled_x(ctrl_a, b));
        gates.push_back(Gate::cx(b, a));
        break;
      }
    }
  }
  return Circuit(width, std::move(gates), c.label());
}

}  // namespace qmod
