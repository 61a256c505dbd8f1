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
#include <unordered_map>
#include <vector>

#include "qmod/modarith.hpp"
#include "qmod/oracle.hpp"
#include "qmod/statevector.hpp"

namespace qmod {

/// Wires that no gate can move out of their computational-basis value: they
/// only ever appear as controls or under diagonal gates. The circuit is block
/// diagonal with respect to them.
inline std::vector<bool> passive_wires(const Circuit& c) {
  std::vector<bool> passive(c.num_wires(), true);
  for (const Gate& g : c.gates()) {
    if (is_diagonal(g.kind())) continue;
    for (Wire w : g.targets()) passive[w] = false;
  }
  return passive;
}

/// Basis index with each role in `roles` holding the matching value and
/// every other wire zero.
inline std::uint64_t encode_registers(const RegisterLayout& layout,
                                      std::span<const Role> roles,
                                      std::span<const std::uint64_t> values) {
  if (roles.size() != values.size()) {
    throw std::invalid_argument("register/value count mismatch");
  }
  std::uint64_t basis = 0;
  for (std::size_t i = 0; i < roles.size(); ++i) {
    basis = layout.write(basis, roles[i], values[i]);
  }
  return basis;
}

struct CaseResult {
  std::vector<std::uint64_t> input;
  std::vector<std::uint64_t> expected;
  double fidelity = 0.0;       // |<expected|U|input>|^2
  double ancilla_clean = 0.0;  // P(all overflow/sign/aux wires read 0)
  bool pass = false;
};

struct VerificationReport {
  OperatorSpec spec;
  std::vector<CaseResult> cases;
  std::size_t simulations = 0;

  bool all_pass() const {
    return std::all_of(cases.begin(), cases.end(),
                       [](const CaseResult& c) { return c.pass; });
  }
  std::size_t passed() const {
    return static_cast<std::size_t>(std::count_if(
        cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; }));
  }
  double min_fidelity() const {
    double m = 1.0;
    for (const auto& c : cases) m = std::min(m, c.fidelity);
    return m;
  }
  double min_ancilla_clean() const {
    double m = 1.0;
    for (const auto& c : cases) m = std::min(m, c.ancilla_clean);
    return m;
  }
};

struct VerifyOptions {
  Construction construction = Construction::kDefault;
  double tolerance = 1e-9;
  /// Put input registers the circuit only reads into uniform superposition
  /// and read every case off one simulation. Exact because the circuit is
  /// block diagonal in those registers.
  bool batch_passive = true;
};

/// Simulates `op` against every row of `table` and scores each case.
inline VerificationReport verify_circuit(const OperatorCircuit& op,
                                         const TruthTable& table,
                                         const VerifyOptions& opts = {}) {
  const RegisterLayout& layout = op.layout;
  const std::vector<Role> in_roles = input_roles(table.spec.kind);
  const std::vector<Role> out_roles = output_roles(table.spec.kind);
  const std::uint64_t anc_mask = layout.ancilla_mask();

  // Which input registers may be batched.
  const std::vector<bool> wire_passive = passive_wires(op.circuit);
  std::vector<bool> reg_passive(in_roles.size(), false);
  std::uint64_t passive_mask = 0;
  if (opts.batch_passive) {
    for (std::size_t r = 0; r < in_roles.size(); ++r) {
      bool all = true;
      for (Wire w : layout.wires(in_roles[r])) all = all && wire_passive[w];
      reg_passive[r] = all;
      if (all) passive_mask |= layout.mask(in_roles[r]);
    }
  }

  // Group rows by the values of their active (non-batched) registers.
  std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    std::vector<std::uint64_t> key;
    for (std::size_t r = 0; r < in_roles.size(); ++r) {
      if (!reg_passive[r]) key.push_back(table.rows[i].input[r]);
    }
    groups[key].push_back(i);
  }

  VerificationReport report{table.spec, {}, 0};
  report.cases.resize(table.rows.size());
  const std::size_t dim = std::size_t{1} << layout.num_wires();

  for (const auto& [key, members] : groups) {
    const double weight = static_cast<double>(members.size());
    const double amp = 1.0 / std::sqrt(weight);
    std::vector<StateVector::Amplitude> amps(dim, {0.0, 0.0});
    std::unordered_map<std::uint64_t, std::size_t> block_of;
    for (std::size_t idx : members) {
      const std::uint64_t basis =
          encode_registers(layout, in_roles, table.rows[idx].input);
      amps[basis] = amp;
      block_of[basis & passive_mask] = idx;
    }
    StateVector state = StateVector::from_amplitudes(layout.num_wires(), std::move(amps));
    state.apply(op.circuit);
    ++report.simulations;

    std::unordered_map<std::size_t, double> clean;
    auto out = state.amplitudes();
    for (std::uint64_t i = 0; i < out.size(); ++i) {
      if ((i & anc_mask) != 0) continue;
      const double p = std::norm(out[i]);
      if (p == 0.0) continue;
      auto it = block_of.find(i & passive_mask);
      if (it != block_of.end()) clean[it->second] += p;
    }
    for (std::size_t idx : members) {
      const TruthRow& row = table.rows[idx];
      CaseResult& c = report.cases[idx];
      c.input = row.input;
      c.expected = row.output;
      const std::uint64_t target = encode_registers(layout, out_roles, row.output);
      c.fidelity = std::min(1.0, weight * std::norm(out[target]));
      c.ancilla_clean = std::min(1.0, weight * clean[idx]);
      c.pass = c.fidelity >= 1.0 - opts.tolerance &&
               c.ancilla_clean >= 1.0 - opts.tolerance;
    }
  }
  return report;
}

/// Synthesizes `spec` and checks it against its classical truth table.
inline VerificationReport verify_operator(const OperatorSpec& spec,
                                          const VerifyOptions& opts = {}) {
  return verify_circuit(synthesize(spec, opts.construction), truth_table(spec),
                        opts);
}

/// Runs `op` on the basis input given as register values in ket order.
inline StateVector run_on_basis(const OperatorCircuit& op, OperatorKind kind,
                                std::span<const std::uint64_t> inputs) {
  const std::vector<Role> roles = input_roles(kind);
  StateVector s = StateVector::from_basis(
      op.layout.num_wires(), encode_registers(op.layout, roles, inputs));
  s.apply(op.circuit);
  return s;
}

}  // namespace qmod
