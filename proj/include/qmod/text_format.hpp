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

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "qmod/circuit.hpp"

namespace qmod {

/// Line-oriented circuit text:
///
///   qubits <n>
///   h q[i] | x q[i] | p(<angle>) q[i] | cp(<angle>) q[c],q[t]
///   mcp(<angle>) q[c1],...,q[t] | cx q[c],q[t] | mcx q[c1],...,q[t]
///   swap q[i],q[j]
///
/// Angles are radians with 17 significant digits, enough to round-trip any
/// double exactly.
inline std::string emit_text(const Circuit& c) {
  std::string out = "qubits " + std::to_string(c.num_wires()) + "\n";
  char buf[64];
  for (const Gate& g : c.gates()) {
    out += mnemonic(g.kind());
    if (has_angle(g.kind())) {
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, g.angle(),
                                     std::chars_format::general, 17);
      out += '(';
      out.append(buf, end);
      out += ')';
    }
    out += ' ';
    bool first = true;
    for (Wire w : g.wires()) {
      if (!first) out += ',';
      first = false;
      out += "q[" + std::to_string(w) + "]";
    }
    out += '\n';
  }
  return out;
}

namespace detail {

[[noreturn]] inline void parse_fail(std::size_t line_no, const std::string& why) {
  throw std::invalid_argument("circuit text line " + std::to_string(line_no) +
                              ": " + why);
}

inline std::uint64_t parse_uint(std::string_view s, std::size_t line_no) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    parse_fail(line_no, "bad integer '" + std::string(s) + "'");
  }
  return v;
}

inline GateKind kind_from_mnemonic(std::string_view m, std::size_t line_no) {
  for (GateKind k : kAllGateKinds) {
    if (mnemonic(k) == m) return k;
  }
  parse_fail(line_no, "unknown gate '" + std::string(m) + "'");
}

}  // namespace detail

inline Circuit parse_text(std::string_view text) {
  std::size_t pos = 0, line_no = 0;
  auto next_line = [&](std::string_view& line) {
    if (pos >= text.size()) return false;
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    return true;
  };

  std::string_view line;
  if (!next_line(line) || !line.starts_with("qubits ")) {
    detail::parse_fail(1, "expected 'qubits <n>' header");
  }
  const std::size_t num_wires =
      detail::parse_uint(line.substr(7), line_no);

  CircuitBuilder builder(num_wires);
  while (next_line(line)) {
    const std::size_t space = line.find(' ');
    if (space == std::string_view::npos) detail::parse_fail(line_no, "missing operands");
    std::string_view head = line.substr(0, space);
    std::string_view operands = line.substr(space + 1);

    double angle = 0.0;
    std::string_view name = head;
    if (std::size_t paren = head.find('('); paren != std::string_view::npos) {
      if (!head.ends_with(")")) detail::parse_fail(line_no, "unterminated angle");
      name = head.substr(0, paren);
      std::string_view num = head.substr(paren + 1, head.size() - paren - 2);
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), angle);
      if (ec != std::errc{} || ptr != num.data() + num.size()) {
        detail::parse_fail(line_no, "bad angle '" + std::string(num) + "'");
      }
    }
    const GateKind kind = detail::kind_from_mnemonic(name, line_no);
    if (has_angle(kind) != (name.size() != head.size())) {
      detail::parse_fail(line_no, "angle presence does not match gate kind");
    }

    std::vector<Wire> wires;
    while (!operands.empty()) {
      std::size_t comma = operands.find(',');
      std::string_view op = operands.substr(0, comma);
      if (!op.starts_with("q[") || !op.ends_with("]")) {
        detail::parse_fail(line_no, "bad operand '" + std::string(op) + "'");
      }
      wires.push_back(static_cast<Wire>(
          detail::parse_uint(op.substr(2, op.size() - 3), line_no)));
      if (comma == std::string_view::npos) break;
      operands.remove_prefix(comma + 1);
      if (operands.empty()) detail::parse_fail(line_no, "trailing comma");
    }
    try {
      builder.add(Gate(kind, std::move(wires), angle));
    } catch (const std::invalid_argument& e) {
      detail::parse_fail(line_no, e.what());
    }
  }
  return std::move(builder).build();
}

}  // namespace qmod
