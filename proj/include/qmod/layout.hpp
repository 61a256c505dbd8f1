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

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmod/gate.hpp"

namespace qmod {

enum class Role { kDataA, kDataB, kDataC, kOverflow, kSignAncilla, kAux };

inline std::string_view role_name(Role r) {
  switch (r) {
    case Role::kDataA: return "data_a";
    case Role::kDataB: return "data_b";
    case Role::kDataC: return "data_c";
    case Role::kOverflow: return "overflow";
    case Role::kSignAncilla: return "sign_ancilla";
    case Role::kAux: return "aux";
  }
  return "?";
}

/// Overflow, sign and aux wires must return to |0> after every operator.
inline bool is_ancilla_role(Role r) {
  return r == Role::kOverflow || r == Role::kSignAncilla || r == Role::kAux;
}

struct RegisterGroup {
  Role role;
  Wire first;
  std::size_t size;
};

/// Partition of a circuit's wires into named contiguous registers.
/// Registers are big-endian: the group's first wire is its MSB.
class RegisterLayout {
 public:
  RegisterLayout() = default;

  /// Groups are laid out back to back in the given order starting at wire 0.
  RegisterLayout(std::size_t modulus_bits,
                 std::initializer_list<std::pair<Role, std::size_t>> groups)
      : modulus_bits_(modulus_bits) {
    for (auto [role, size] : groups) append(role, size);
  }

  RegisterLayout& append(Role role, std::size_t size) {
    if (size == 0) throw std::invalid_argument("empty register group");
    if (has(role)) {
      throw std::invalid_argument("duplicate register role " +
                                  std::string(role_name(role)));
    }
    if ((role == Role::kOverflow || role == Role::kSignAncilla) && size != 1) {
      throw std::invalid_argument(std::string(role_name(role)) +
                                  " must be a single wire");
    }
    groups_.push_back({role, static_cast<Wire>(num_wires_), size});
    num_wires_ += size;
    return *this;
  }

  std::size_t num_wires() const { return num_wires_; }
  std::size_t modulus_bits() const { return modulus_bits_; }
  std::span<const RegisterGroup> groups() const { return groups_; }

  bool has(Role role) const { return find(role) != nullptr; }

  const RegisterGroup& group(Role role) const {
    const RegisterGroup* g = find(role);
    if (g == nullptr) {
      throw std::invalid_argument("layout has no register " +
                                  std::string(role_name(role)));
    }
    return *g;
  }

  std::vector<Wire> wires(Role role) const {
    const RegisterGroup& g = group(role);
    std::vector<Wire> out(g.size);
    for (std::size_t i = 0; i < g.size; ++i) out[i] = g.first + Wire(i);
    return out;
  }

  /// Wires of `role` preceded by the overflow wire when the overflow group
  /// sits directly in front of it (an n+1 wide accumulator).
  std::vector<Wire> accumulator(Role role) const {
    std::vector<Wire> out;
    const RegisterGroup& g = group(role);
    if (const RegisterGroup* o = find(Role::kOverflow);
        o != nullptr && o->first + 1 == g.first) {
      out.push_back(o->first);
    }
    for (std::size_t i = 0; i < g.size; ++i) out.push_back(g.first + Wire(i));
    return out;
  }

  std::size_t ancilla_count() const {
    std::size_t n = 0;
    for (const auto& g : groups_) {
      if (is_ancilla_role(g.role)) n += g.size;
    }
    return n;
  }

  /// Bitmask (over basis indices) of every wire in `role`.
  std::uint64_t mask(Role role) const {
    const RegisterGroup& g = group(role);
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < g.size; ++i) m |= bit(g.first + Wire(i));
    return m;
  }

  std::uint64_t ancilla_mask() const {
    std::uint64_t m = 0;
    for (const auto& g : groups_) {
      if (is_ancilla_role(g.role)) m |= mask(g.role);
    }
    return m;
  }

  /// Value held by `role` in basis state `basis`.
  std::uint64_t read(std::uint64_t basis, Role role) const {
    const RegisterGroup& g = group(role);
    std::size_t shift = num_wires_ - (g.first + g.size);
    return (basis >> shift) & ((std::uint64_t{1} << g.size) - 1);
  }

  /// `basis` with `role` overwritten by `value`.
  std::uint64_t write(std::uint64_t basis, Role role,
                      std::uint64_t value) const {
    const RegisterGroup& g = group(role);
    if (g.size < 64 && (value >> g.size) != 0) {
      throw std::invalid_argument("value " + std::to_string(value) +
                                  " does not fit register " +
                                  std::string(role_name(role)));
    }
    std::size_t shift = num_wires_ - (g.first + g.size);
    std::uint64_t field = ((std::uint64_t{1} << g.size) - 1) << shift;
    return (basis & ~field) | (value << shift);
  }

  /// Basis-index bit of a wire (wire 0 is the MSB).
  std::uint64_t bit(Wire w) const {
    return std::uint64_t{1} << (num_wires_ - 1 - w);
  }

 private:
  const RegisterGroup* find(Role role) const {
    for (const auto& g : groups_) {
      if (g.role == role) return &g;
    }
    return nullptr;
  }

  std::size_t modulus_bits_ = 0;
  std::size_t num_wires_ = 0;
  std::vector<RegisterGroup> groups_;
};

}  // namespace qmod
