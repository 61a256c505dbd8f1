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
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "qmod/circuit.hpp"
#include "qmod/layout.hpp"
#include "qmod/operator_spec.hpp"
#include "qmod/oracle.hpp"
#include "qmod/qft.hpp"

namespace qmod {

/// Which decomposition to use for the quantum-quantum operators.
enum class Construction {
  /// Depth-oriented: one Draper register addition with a single modular
  /// reduction for Add_in(N); a product register reduced bit by bit for
  /// Mult_out(N).
  kDefault,
  /// Bit-by-bit controlled constant adders: Add_in(N) as n blocks
  /// c_{a_i}-Add_in(2^{n-i-1}, N), Mult_out(N) as n controlled
  /// Mult_out(2^{n-i-1}, N) blocks. Fewer wires, one more power of n depth.
  kBitwise,
};

struct OperatorCircuit {
  Circuit circuit;
  RegisterLayout layout;
};

namespace detail {

inline std::vector<Wire> with_control(std::span<const Wire> controls, Wire extra) {
  std::vector<Wire> out(controls.begin(), controls.end());
  out.push_back(extra);
  return out;
}

inline std::int64_t pow2_mod(std::size_t e, std::int64_t modulus) {
  return mod_pow(2, static_cast<std::int64_t>(e), modulus);
}

/// Reorders a block of mutually commuting (diagonal) gates into greedy
/// first-fit layers so ASAP scheduling packs them densely.
inline std::vector<Gate> schedule_commuting(std::vector<Gate> gates,
                                            std::size_t num_wires) {
  std::vector<std::vector<char>> busy;
  std::vector<std::size_t> layer_of(gates.size());
  for (std::size_t g = 0; g < gates.size(); ++g) {
    std::size_t layer = 0;
    for (;; ++layer) {
      if (layer == busy.size()) busy.emplace_back(num_wires, 0);
      bool free = true;
      for (Wire w : gates[g].wires()) free = free && !busy[layer][w];
      if (free) break;
    }
    for (Wire w : gates[g].wires()) busy[layer][w] = 1;
    layer_of[g] = layer;
  }
  std::vector<std::size_t> order(gates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return layer_of[a] < layer_of[b];
  });
  std::vector<Gate> out;
  out.reserve(gates.size());
  for (std::size_t i : order) out.push_back(std::move(gates[i]));
  return out;
}

/// target += sign * addend on a target held in the Fourier basis (no
/// modular reduction). Phases that are whole turns are omitted.
inline void append_fourier_add_register(CircuitBuilder& b,
                                        std::span<const Wire> addend,
                                        std::span<const Wire> target, int sign,
                                        std::span<const Wire> controls = {}) {
  std::vector<Gate> block;
  const std::size_t len = addend.size();
  for (std::size_t j = 0; j < len; ++j) {
    const std::int64_t weight = std::int64_t{1} << (len - 1 - j);
    std::vector<Wire> ctrl = with_control(controls, addend[j]);
    for (std::size_t w = 0; w < target.size(); ++w) {
      const double angle = fourier_sum_angle(weight, w);
      if (angle == 0.0) continue;
      block.push_back(Gate::controlled_phase(sign * angle, ctrl, target[w]));
    }
  }
  for (Gate& g : schedule_commuting(std::move(block), b.num_wires())) {
    b.add(std::move(g));
  }
}

/// anc ^= (negate ? !msb : msb) for an accumulator held in the Fourier
/// basis: IQFT, copy the MSB out, QFT. The Hadamards on the MSB that close
/// the IQFT and open the QFT are folded into the copy, since
/// H(msb) CX(msb, anc) H(msb) = H(anc) CX(anc, msb) H(anc).
inline void append_sign_extract(CircuitBuilder& b, std::span<const Wire> acc,
                                Wire anc, bool negate) {
  const Wire msb = acc[0];
  std::vector<Gate> ladder = qft_gates(acc, false);
  for (auto it = ladder.rbegin(); it + 1 != ladder.rend(); ++it) {
    b.add(it->adjoint());
  }
  b.add(Gate::h(anc));
  b.add(Gate::cx(anc, msb));
  b.add(Gate::h(anc));
  if (negate) b.add(Gate::x(anc));
  for (auto it = ladder.begin() + 1; it != ladder.end(); ++it) b.add(*it);
}

/// Modular constant adder on an accumulator held in the Fourier basis.
/// `acc` is n+1 wires with acc[0] the overflow MSB; `anc` is the sign
/// ancilla. Every k-dependent Sum is conditioned on `controls`; when a
/// control is off the block is the identity on residues a < N. The
/// arithmetic uses the swap-free QFT ladder, so Sums address acc reversed.
///
///   Sum(k) Sum(-N) IQFT [MSB->anc] QFT c_anc-Sum(N)      (reduce)
///   Sum(-k) IQFT [!MSB->anc] QFT                         (clean anc)
///   Sum(k)                                               (restore)
inline void append_mod_add_const_fourier(CircuitBuilder& b, std::int64_t k,
                                         std::int64_t modulus,
                                         std::span<const Wire> acc, Wire anc,
                                         std::span<const Wire> controls = {}) {
  const Wire anc_wires[] = {anc};
  const std::vector<Wire> f = reversed_wires(acc);
  CircuitBuilder diag(b.num_wires());
  auto flush = [&] {
    Circuit c = std::move(diag).build();
    for (Gate& g : schedule_commuting(
             std::vector<Gate>(c.gates().begin(), c.gates().end()),
             b.num_wires())) {
      b.add(std::move(g));
    }
    diag = CircuitBuilder(b.num_wires());
  };
  append_fourier_sum(diag, k, f, controls);
  append_fourier_sum(diag, -modulus, f);
  flush();
  append_sign_extract(b, acc, anc, false);
  append_fourier_sum(diag, modulus, f, anc_wires);
  append_fourier_sum(diag, -k, f, controls);
  flush();
  append_sign_extract(b, acc, anc, true);
  append_fourier_sum(b, k, f, controls);
}

/// acc += addend (mod N) with both values below N, acc in the Fourier basis.
/// a + b < 2N, so one conditional subtraction of N suffices; the sign
/// ancilla is cleaned by comparing the result against the addend.
inline void append_mod_add_qq_fourier(CircuitBuilder& b, std::int64_t modulus,
                                      std::span<const Wire> addend,
                                      std::span<const Wire> acc, Wire anc) {
  const Wire anc_wires[] = {anc};
  const std::vector<Wire> f = reversed_wires(acc);
  append_fourier_add_register(b, addend, f, +1);
  append_fourier_sum(b, -modulus, f);
  append_sign_extract(b, acc, anc, false);
  append_fourier_sum(b, modulus, f, anc_wires);
  append_fourier_add_register(b, addend, f, -1);
  append_sign_extract(b, acc, anc, true);
  append_fourier_add_register(b, addend, f, +1);
}

/// acc += k * a (mod N): QFT, one controlled modular adder of
/// k * 2^(n-1-j) mod N per bit a_j, IQFT.
inline void append_mult_out_const(CircuitBuilder& b, std::int64_t k,
                                  std::int64_t modulus,
                                  std::span<const Wire> a,
                                  std::span<const Wire> acc, Wire anc,
                                  std::span<const Wire> controls = {}) {
  const std::size_t n = a.size();
  append_qft(b, acc, false);
  for (std::size_t j = 0; j < n; ++j) {
    using Wide = unsigned __int128;
    const auto term = static_cast<std::int64_t>(
        Wide(static_cast<std::uint64_t>(k)) *
        static_cast<std::uint64_t>(pow2_mod(n - 1 - j, modulus)) %
        static_cast<std::uint64_t>(modulus));
    append_mod_add_const_fourier(b, term, modulus, acc, anc,
                                 with_control(controls, a[j]));
  }
  append_iqft(b, acc, false);
}

inline void append_controlled_swap(CircuitBuilder& b, Wire x, Wire y,
                                   std::span<const Wire> controls) {
  if (controls.empty()) {
    b.add(Gate::swap(x, y));
    return;
  }
  b.add(Gate::cx(y, x));
  b.add(Gate::controlled_x(with_control(controls, x), y));
  b.add(Gate::cx(y, x));
}

/// data <- k * data (mod N) using `aux` (n+1 wires, zero on entry and exit):
/// Mult_out(k), swap data with aux's low n wires, Mult_out(k^-1)^dagger.
inline void append_mult_in_const(CircuitBuilder& b, std::int64_t k,
                                 std::int64_t modulus,
                                 std::span<const Wire> data,
                                 std::span<const Wire> aux, Wire anc,
                                 std::span<const Wire> controls = {}) {
  const std::int64_t k_inv = mod_inv(k, modulus);
  append_mult_out_const(b, k, modulus, data, aux, anc, controls);
  for (std::size_t i = 0; i < data.size(); ++i) {
    append_controlled_swap(b, data[i], aux[i + 1], controls);
  }
  CircuitBuilder undo(b.num_wires());
  append_mult_out_const(undo, k_inv, modulus, data, aux, anc, controls);
  b.append(inverse(std::move(undo).build()));
}

inline void append_copy(CircuitBuilder& b, std::span<const Wire> from,
                        std::span<const Wire> to) {
  for (std::size_t i = 0; i < from.size(); ++i) b.add(Gate::cx(from[i], to[i]));
}

}  // namespace detail

/// |a> -> |a + k mod N>. Layout: overflow, data_a (n), sign_ancilla.
inline OperatorCircuit add_in_const(std::int64_t k, std::int64_t modulus) {
  OperatorSpec::add_in_const(k, modulus);
  const std::size_t n = modulus_bits(modulus);
  RegisterLayout layout(n, {{Role::kOverflow, 1},
                            {Role::kDataA, n},
                            {Role::kSignAncilla, 1}});
  const auto acc = layout.accumulator(Role::kDataA);
  const Wire anc = layout.group(Role::kSignAncilla).first;
  CircuitBuilder b(layout.num_wires(), "add_in_const");
  detail::append_qft(b, acc, false);
  detail::append_mod_add_const_fourier(b, k, modulus, acc, anc);
  detail::append_iqft(b, acc, false);
  return {std::move(b).build(), layout};
}

/// |a>|0> -> |a>|a + k mod N>: copy a, then Add_in(k, N) on the copy.
inline OperatorCircuit add_out_const(std::int64_t k, std::int64_t modulus) {
  OperatorSpec::add_out_const(k, modulus);
  const std::size_t n = modulus_bits(modulus);
  RegisterLayout layout(n, {{Role::kDataA, n},
                            {Role::kOverflow, 1},
                            {Role::kDataB, n},
                            {Role::kSignAncilla, 1}});
  const auto acc = layout.accumulator(Role::kDataB);
  const Wire anc = layout.group(Role::kSignAncilla).first;
  CircuitBuilder b(layout.num_wires(), "add_out_const");
  detail::append_copy(b, layout.wires(Role::kDataA), layout.wires(Role::kDataB));
  detail::append_qft(b, acc, false);
  detail::append_mod_add_const_fourier(b, k, modulus, acc, anc);
  detail::append_iqft(b, acc, false);
  return {std::move(b).build(), layout};
}

namespace detail {

inline void append_add_in_qq(CircuitBuilder& b, std::int64_t modulus,
                             std::span<const Wire> a, std::span<const Wire> acc,
                             Wire anc, Construction how) {
  append_qft(b, acc, false);
  if (how == Construction::kBitwise) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Wire ctrl[] = {a[i]};
      append_mod_add_const_fourier(b, pow2_mod(n - 1 - i, modulus), modulus,
                                   acc, anc, ctrl);
    }
  } else {
    append_mod_add_qq_fourier(b, modulus, a, acc, anc);
  }
  append_iqft(b, acc, false);
}

}  // namespace detail

/// |a>|b> -> |a>|a + b mod N>. Layout: data_a, overflow, data_b, sign_ancilla.
inline OperatorCircuit add_in_qq(std::int64_t modulus,
                                 Construction how = Construction::kDefault) {
  OperatorSpec::add_in_qq(modulus);
  const std::size_t n = modulus_bits(modulus);
  RegisterLayout layout(n, {{Role::kDataA, n},
                            {Role::kOverflow, 1},
                            {Role::kDataB, n},
                            {Role::kSignAncilla, 1}});
  CircuitBuilder b(layout.num_wires(), "add_in_qq");
  detail::append_add_in_qq(b, modulus, layout.wires(Role::kDataA),
                           layout.accumulator(Role::kDataB),
                           layout.group(Role::kSignAncilla).first, how);
  return {std::move(b).build(), layout};
}

/// |a>|b>|0> -> |a>|b>|a + b mod N>: copy a into c, then Add_in(N) with b.
inline OperatorCircuit add_out_qq(std::int64_t modulus,
                                  Construction how = Construction::kDefault) {
  OperatorSpec::add_out_qq(modulus);
  const std::size_t n = modulus_bits(modulus);
  RegisterLayout layout(n, {{Role::kDataA, n},
                            {Role::kDataB, n},
                            {Role::kOverflow, 1},
                            {Role::kDataC, n},
                            {Role::kSignAncilla, 1}});
  CircuitBuilder b(layout.num_wires(), "add_out_qq");
  detail::append_copy(b, layout.wires(Role::kDataA), layout.wires(Role::kDataC));
  detail::append_add_in_qq(b, modulus, layout.wires(Role::kDataB),
                           layout.accumulator(Role::kDataC),
                           layout.group(Role::kSignAncilla).first, how);
  return {std::move(b).build(), layout};
}

/// |a>|b> -> |a>|b + k a mod N>. Layout: data_a, overflow, data_b, sign.
inline OperatorCircuit mult_out_const(std::int64_t k, std::int64_t modulus) {
  OperatorSpec::mult_out_const(k, modulus);
  const std::size_t n = modulus_bits(modulus);
  RegisterLayout layout(n, {{Role::kDataA, n},
                            {Role::kOverflow, 1},
                            {Role::kDataB, n},
                            {Role::kSignAncilla, 1}});
  CircuitBuilder b(layout.num_wires(), "mult_out_const");
  detail::append_mult_out_const(b, k, modulus, layout.wires(Role::kDataA),
                                layout.accumulator(Role::kDataB),
                                layout.group(Role::kSignAncilla).first);
  return {std::move(b).build(), layout};
}

/// |a> -> |k a mod N>, gcd(k, N) = 1. Layout: data_a (n), aux (n+1), sign.
inline OperatorCircuit mult_in_const(std::int64_t k, std::int64_t modulus) {
  OperatorSpec::mult_in_const(k, modulus);
  const std::size_t n = modulus_bits(modulus);
  RegisterLayout layout(n, {{Role::kDataA, n},
                            {Role::kAux, n + 1},
                            {Role::kSignAncilla, 1}});
  CircuitBuilder b(layout.num_wires(), "mult_in_const");
  detail::append_mult_in_const(b, k, modulus, layout.wires(Role::kDataA),
                               layout.wires(Role::kAux),
                               layout.group(Role::kSignAncilla).first);
  return {std::move(b).build(), layout};
}

/// |a>|b>|0> -> |a>|b>|a b mod N>.
///
/// kBitwise layout: data_a, data_b, overflow, data_c, sign. For every pair
/// (a_i, b_j) a doubly controlled modular adder of 2^(2n-2-i-j) mod N, all
/// inside one shared QFT/IQFT on c.
///
/// kDefault layout adds an aux product register p of 2n wires before the
/// sign ancilla: p = a*b by doubly controlled Fourier phases, c += p mod N
/// with one controlled modular adder per bit of p, then p is uncomputed.
inline OperatorCircuit mult_out_qq(std::int64_t modulus,
                                   Construction how = Construction::kDefault) {
  OperatorSpec::mult_out_qq(modulus);
  const std::size_t n = modulus_bits(modulus);
  RegisterLayout layout(n, {{Role::kDataA, n},
                            {Role::kDataB, n},
                            {Role::kOverflow, 1},
                            {Role::kDataC, n}});
  if (how == Construction::kDefault) layout.append(Role::kAux, 2 * n);
  layout.append(Role::kSignAncilla, 1);

  const auto a = layout.wires(Role::kDataA);
  const auto bw = layout.wires(Role::kDataB);
  const auto acc = layout.accumulator(Role::kDataC);
  const Wire anc = layout.group(Role::kSignAncilla).first;
  CircuitBuilder b(layout.num_wires(), "mult_out_qq");

  if (how == Construction::kBitwise) {
    detail::append_qft(b, acc, false);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Wire ctrl[] = {a[i], bw[j]};
        detail::append_mod_add_const_fourier(
            b, detail::pow2_mod(2 * n - 2 - i - j, modulus), modulus, acc, anc,
            ctrl);
      }
    }
    detail::append_iqft(b, acc, false);
    return {std::move(b).build(), layout};
  }

  const auto p = layout.wires(Role::kAux);
  const std::vector<Wire> pf = detail::reversed_wires(p);
  auto product_phases = [&](int sign) {
    std::vector<Gate> block;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::int64_t weight = std::int64_t{1} << (2 * n - 2 - i - j);
        const Wire ctrl[] = {a[i], bw[j]};
        for (std::size_t w = 0; w < p.size(); ++w) {
          const double angle = detail::fourier_sum_angle(weight, w);
          if (angle == 0.0) continue;
          block.push_back(Gate::controlled_phase(sign * angle, ctrl, pf[w]));
        }
      }
    }
    for (Gate& g : detail::schedule_commuting(std::move(block), b.num_wires())) {
      b.add(std::move(g));
    }
  };

  detail::append_qft(b, p, false);
  product_phases(+1);
  detail::append_iqft(b, p, false);
  detail::append_qft(b, acc, false);
  for (std::size_t w = 0; w < p.size(); ++w) {
    const Wire ctrl[] = {p[w]};
    detail::append_mod_add_const_fourier(
        b, detail::pow2_mod(p.size() - 1 - w, modulus), modulus, acc, anc, ctrl);
  }
  detail::append_iqft(b, acc, false);
  detail::append_qft(b, p, false);
  product_phases(-1);
  detail::append_iqft(b, p, false);
  return {std::move(b).build(), layout};
}

/// |x>|0>|0> -> |x>|base^x mod N>|0>. The work register is set to 1 by a
/// leading X, then for each exponent bit x_i a controlled Mult_in by the
/// precomputed base^(2^(t-1-i)) mod N. Layout: data_a (exponent, t wires),
/// data_b (work, n), aux (n+1), sign_ancilla.
inline OperatorCircuit exp_out(std::int64_t a_base, std::int64_t modulus,
                               std::size_t exponent_width = 0) {
  const OperatorSpec spec = OperatorSpec::exp_out(a_base, modulus, exponent_width);
  const std::size_t n = spec.n();
  const std::size_t t = spec.exponent_bits();
  RegisterLayout layout(n, {{Role::kDataA, t},
                            {Role::kDataB, n},
                            {Role::kAux, n + 1},
                            {Role::kSignAncilla, 1}});
  const auto x = layout.wires(Role::kDataA);
  const auto work = layout.wires(Role::kDataB);
  const auto aux = layout.wires(Role::kAux);
  const Wire anc = layout.group(Role::kSignAncilla).first;
  CircuitBuilder b(layout.num_wires(), "exp_out");
  // squares[j] = base^(2^j) mod N
  std::vector<std::int64_t> squares(t);
  squares[0] = a_base % modulus;
  for (std::size_t j = 1; j < t; ++j) {
    squares[j] = mod_pow(squares[j - 1], 2, modulus);
  }
  b.add(Gate::x(work.back()));
  for (std::size_t i = 0; i < t; ++i) {
    const Wire ctrl[] = {x[i]};
    detail::append_mult_in_const(b, squares[t - 1 - i], modulus, work, aux,
                                 anc, ctrl);
  }
  return {std::move(b).build(), layout};
}

/// Circuit for any operator spec.
inline OperatorCircuit synthesize(const OperatorSpec& spec,
                                  Construction how = Construction::kDefault) {
  spec.validate();
  switch (spec.kind) {
    case OperatorKind::kAddInConst: return add_in_const(spec.k, spec.modulus);
    case OperatorKind::kAddOutConst: return add_out_const(spec.k, spec.modulus);
    case OperatorKind::kAddInQQ: return add_in_qq(spec.modulus, how);
    case OperatorKind::kAddOutQQ: return add_out_qq(spec.modulus, how);
    case OperatorKind::kMultOutConst: return mult_out_const(spec.k, spec.modulus);
    case OperatorKind::kMultInConst: return mult_in_const(spec.k, spec.modulus);
    case OperatorKind::kMultOutQQ: return mult_out_qq(spec.modulus, how);
    case OperatorKind::kExpOut:
      return exp_out(spec.a_base, spec.modulus, spec.exponent_width);
  }
  throw std::logic_error("unhandled operator kind");
}

/// Registers holding the input tuple, in ket order.
inline std::vector<Role> input_roles(OperatorKind kind) {
  if (input_arity(kind) == 1) return {Role::kDataA};
  return {Role::kDataA, Role::kDataB};
}

/// Registers holding the output tuple, in ket order. Every other wire must
/// read zero after the operator.
inline std::vector<Role> output_roles(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::kAddInConst:
    case OperatorKind::kMultInConst:
      return {Role::kDataA};
    case OperatorKind::kAddOutConst:
    case OperatorKind::kAddInQQ:
    case OperatorKind::kMultOutConst:
    case OperatorKind::kExpOut:
      return {Role::kDataA, Role::kDataB};
    case OperatorKind::kAddOutQQ:
    case OperatorKind::kMultOutQQ:
      return {Role::kDataA, Role::kDataB, Role::kDataC};
  }
  return {};
}

/// The register carrying the operator's computed value.
inline Role result_role(OperatorKind kind) { return output_roles(kind).back(); }

}  // namespace qmod
