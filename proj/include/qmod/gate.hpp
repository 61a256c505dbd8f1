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
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qmod {

using Wire = std::uint32_t;

enum class GateKind {
  kHadamard,
  kPauliX,
  kPhase,
  kControlledPhase,
  kMultiControlledPhase,
  kControlledX,
  kMultiControlledX,
  kSwap,
};

inline constexpr GateKind kAllGateKinds[] = {
    GateKind::kHadamard,         GateKind::kPauliX,
    GateKind::kPhase,            GateKind::kControlledPhase,
    GateKind::kMultiControlledPhase, GateKind::kControlledX,
    GateKind::kMultiControlledX, GateKind::kSwap,
};

/// Lowercase mnemonic used by the circuit text format and JSON reports.
inline std::string_view mnemonic(GateKind kind) {
  switch (kind) {
    case GateKind::kHadamard: return "h";
    case GateKind::kPauliX: return "x";
    case GateKind::kPhase: return "p";
    case GateKind::kControlledPhase: return "cp";
    case GateKind::kMultiControlledPhase: return "mcp";
    case GateKind::kControlledX: return "cx";
    case GateKind::kMultiControlledX: return "mcx";
    case GateKind::kSwap: return "swap";
  }
  return "?";
}

inline bool has_angle(GateKind kind) {
  return kind == GateKind::kPhase || kind == GateKind::kControlledPhase ||
         kind == GateKind::kMultiControlledPhase;
}

/// Diagonal gates never change the computational-basis value of any wire.
inline bool is_diagonal(GateKind kind) { return has_angle(kind); }

/// A primitive unitary bound to wires. Controls come first, the target(s)
/// last. Instances are validated on construction and immutable afterwards.
class Gate {
 public:
  Gate(GateKind kind, std::vector<Wire> wires, double angle = 0.0)
      : kind_(kind), angle_(has_angle(kind) ? angle : 0.0),
        wires_(std::move(wires)) {
    validate();
  }

  static Gate h(Wire w) { return Gate(GateKind::kHadamard, {w}); }
  static Gate x(Wire w) { return Gate(GateKind::kPauliX, {w}); }
  static Gate phase(double angle, Wire w) {
    return Gate(GateKind::kPhase, {w}, angle);
  }
  static Gate cphase(double angle, Wire control, Wire target) {
    return Gate(GateKind::kControlledPhase, {control, target}, angle);
  }
  static Gate cx(Wire control, Wire target) {
    return Gate(GateKind::kControlledX, {control, target});
  }
  static Gate swap(Wire a, Wire b) { return Gate(GateKind::kSwap, {a, b}); }

  /// Phase on `target` conditioned on every wire in `controls`; picks the
  /// narrowest kind for the control count.
  static Gate controlled_phase(double angle, std::span<const Wire> controls,
                               Wire target) {
    std::vector<Wire> wires(controls.begin(), controls.end());
    wires.push_back(target);
    GateKind kind = controls.empty()       ? GateKind::kPhase
                    : controls.size() == 1 ? GateKind::kControlledPhase
                                           : GateKind::kMultiControlledPhase;
    return Gate(kind, std::move(wires), angle);
  }

  static Gate controlled_x(std::span<const Wire> controls, Wire target) {
    std::vector<Wire> wires(controls.begin(), controls.end());
    wires.push_back(target);
    GateKind kind = controls.empty()       ? GateKind::kPauliX
                    : controls.size() == 1 ? GateKind::kControlledX
                                           : GateKind::kMultiControlledX;
    return Gate(kind, std::move(wires));
  }

  GateKind kind() const { return kind_; }
  double angle() const { return angle_; }
  std::span<const Wire> wires() const { return wires_; }

  std::size_t num_targets() const { return kind_ == GateKind::kSwap ? 2 : 1; }
  std::span<const Wire> controls() const {
    return std::span<const Wire>(wires_).first(wires_.size() - num_targets());
  }
  std::span<const Wire> targets() const {
    return std::span<const Wire>(wires_).last(num_targets());
  }
  Wire target() const { return wires_.back(); }

  /// Adjoint: phases negate, everything else in the set is self-inverse.
  Gate adjoint() const {
    if (!has_angle(kind_)) return *this;
    return Gate(kind_, wires_, -angle_);
  }

  /// Same gate with every wire moved through `map`.
  template <typename F>
  Gate remapped(F&& map) const {
    std::vector<Wire> wires;
    wires.reserve(wires_.size());
    for (Wire w : wires_) wires.push_back(static_cast<Wire>(map(w)));
    return Gate(kind_, std::move(wires), angle_);
  }

  friend bool operator==(const Gate& a, const Gate& b) {
    // Bitwise angle comparison: -0.0 and 0.0 are distinct in the text format.
    return a.kind_ == b.kind_ && a.wires_ == b.wires_ &&
           std::signbit(a.angle_) == std::signbit(b.angle_) &&
           a.angle_ == b.angle_;
  }

 private:
  void validate() const {
    std::size_t want_min = 1, want_max = 1;
    switch (kind_) {
      case GateKind::kHadamard:
      case GateKind::kPauliX:
      case GateKind::kPhase:
        break;
      case GateKind::kControlledPhase:
      case GateKind::kControlledX:
      case GateKind::kSwap:
        want_min = want_max = 2;
        break;
      case GateKind::kMultiControlledPhase:
      case GateKind::kMultiControlledX:
        want_min = 3;
        want_max = static_cast<std::size_t>(-1);
        break;
    }
    if (wires_.size() < want_min || wires_.size() > want_max) {
      throw std::invalid_argument(std::string("gate '") +
                                  std::string(mnemonic(kind_)) +
                                  "' has wrong wire count " +
                                  std::to_string(wires_.size()));
    }
    std::vector<Wire> sorted = wires_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("gate wires must be pairwise distinct");
    }
    if (!std::isfinite(angle_)) {
      throw std::invalid_argument("gate angle must be finite");
    }
  }

  GateKind kind_;
  double angle_;
  std::vector<Wire> wires_;
};

}  // namespace qmod
