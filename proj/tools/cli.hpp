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

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmod/qmod.hpp"

namespace qmod::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUnverified = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OperatorFlags {
  std::string op;
  std::int64_t k = 0;
  std::int64_t base = 0;
  std::int64_t modulus = 0;
  std::size_t exponent_bits = 0;
  std::string construction = "default";
};

inline Construction construction_from(const std::string& name) {
  if (name == "default") return Construction::kDefault;
  if (name == "bitwise") return Construction::kBitwise;
  throw UsageError("unknown construction '" + name + "' (default, bitwise)");
}

inline OperatorKind kind_from(const std::string& name) {
  if (auto kind = kind_from_cli_name(name)) return *kind;
  std::string known;
  for (OperatorKind k : kAllOperatorKinds) {
    known += known.empty() ? "" : ", ";
    known += cli_name(k);
  }
  throw UsageError("unknown operator '" + name + "' (" + known + ")");
}

inline OperatorSpec spec_from(const OperatorFlags& f) {
  const OperatorKind kind = kind_from(f.op);
  if (f.modulus == 0) throw UsageError("--modulus is required");
  return OperatorSpec::make(kind, f.modulus, f.k, f.base, f.exponent_bits);
}

inline std::vector<std::uint64_t> parse_values(const std::string& text) {
  std::vector<std::uint64_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || end != item.data() + item.size() || item.empty()) {
      throw UsageError("bad input value '" + item + "'");
    }
    values.push_back(v);
  }
  return values;
}

inline std::string tuple_text(const std::vector<std::uint64_t>& v) {
  if (v.size() == 1) return std::to_string(v[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i ? "," : "") + std::to_string(v[i]);
  }
  return s + ")";
}

inline nlohmann::json report_json(const ResourceReport& r) {
  nlohmann::json j;
  j["qubits"] = r.total_qubits;
  j["ancilla"] = r.ancilla_qubits;
  j["depth"] = r.depth;
  j["gates"] = r.gate_counts;
  return j;
}

inline int cmd_build(const OperatorFlags& f, std::ostream& out) {
  const OperatorSpec spec = spec_from(f);
  out << emit_text(synthesize(spec, construction_from(f.construction)).circuit);
  return kExitOk;
}

inline int cmd_run(const OperatorFlags& f, const std::string& input,
                   std::uint64_t shots, std::uint64_t seed, std::ostream& out,
                   std::ostream& err) {
  const OperatorSpec spec = spec_from(f);
  const std::vector<std::uint64_t> values = parse_values(input);
  const std::vector<std::uint64_t> bounds = input_bounds(spec);
  if (values.size() != bounds.size()) {
    throw UsageError(std::string(cli_name(spec.kind)) + " takes " +
                     std::to_string(bounds.size()) + " input value(s)");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= bounds[i]) {
      throw UsageError("input " + std::to_string(values[i]) +
                       " out of range: need < " + std::to_string(bounds[i]));
    }
  }
  const OperatorCircuit op = synthesize(spec, construction_from(f.construction));
  const StateVector state = run_on_basis(op, spec.kind, values);
  const Role result = result_role(spec.kind);

  if (shots == 0) {
    const auto amps = state.amplitudes();
    std::size_t best = 0;
    for (std::size_t i = 1; i < amps.size(); ++i) {
      if (std::norm(amps[i]) > std::norm(amps[best])) best = i;
    }
    out << tuple_text(values) << " -> " << op.layout.read(best, result) << "\n";
    if (std::norm(amps[best]) < 1.0 - 1e-9) {
      err << "output is not a basis state (p = " << std::norm(amps[best]) << ")\n";
      return kExitUnverified;
    }
    return kExitOk;
  }
  std::map<std::uint64_t, std::uint64_t> hist;
  for (std::uint64_t basis : sample_outcomes(state, shots, seed)) {
    ++hist[op.layout.read(basis, result)];
  }
  for (const auto& [value, count] : hist) {
    out << tuple_text(values) << " -> " << value << " : " << count << "\n";
  }
  return kExitOk;
}

inline int cmd_resources(const OperatorFlags& f, const std::string& sweep,
                         std::ostream& out) {
  const Construction how = construction_from(f.construction);
  if (sweep.empty()) {
    const OperatorCircuit op = synthesize(spec_from(f), how);
    out << report_json(resource_report(op.circuit, op.layout)).dump(2) << "\n";
    return kExitOk;
  }
  const OperatorKind kind = kind_from(f.op);
  const auto colon = sweep.find(':');
  if (colon == std::string::npos) throw UsageError("--sweep expects nmin:nmax");
  const auto lo = parse_values(sweep.substr(0, colon));
  const auto hi = parse_values(sweep.substr(colon + 1));
  if (lo.size() != 1 || hi.size() != 1 || lo[0] < 2 || hi[0] <= lo[0] ||
      hi[0] > 30) {
    throw UsageError("--sweep needs 2 <= nmin < nmax <= 30");
  }
  // Sweep instances: N = 2^n - 1 with k = base = 2 (coprime to every such N).
  nlohmann::json reports = nlohmann::json::array();
  std::vector<double> ns, depths, qubits;
  for (std::uint64_t n = lo[0]; n <= hi[0]; ++n) {
    const std::int64_t modulus = (std::int64_t{1} << n) - 1;
    const OperatorSpec spec = OperatorSpec::make(
        kind, modulus, uses_constant(kind) ? 2 : 0, uses_base(kind) ? 2 : 0);
    const OperatorCircuit op = synthesize(spec, how);
    const ResourceReport r = resource_report(op.circuit, op.layout);
    nlohmann::json j = report_json(r);
    j["n"] = n;
    j["modulus"] = modulus;
    reports.push_back(std::move(j));
    ns.push_back(double(n));
    depths.push_back(double(r.depth));
    qubits.push_back(double(r.total_qubits));
  }
  nlohmann::json doc;
  doc["op"] = f.op;
  doc["reports"] = std::move(reports);
  doc["slope"] = loglog_slope(ns, depths);
  doc["qubit_slope"] = loglog_slope(ns, qubits);
  out << doc.dump(2) << "\n";
  return kExitOk;
}

inline int cmd_shor(std::int64_t base, std::int64_t modulus, std::size_t t,
                    std::uint64_t shots, std::uint64_t seed, bool factor,
                    std::ostream& out) {
  if (modulus < 3) throw UsageError("--modulus must be at least 3");
  if (base < 1 || base >= modulus) {
    throw UsageError("--base must lie in [1, N)");
  }
  if (const std::int64_t g = std::gcd(base, modulus); g != 1) {
    throw UsageError("base " + std::to_string(base) + " shares a factor with " +
                     std::to_string(modulus) + " (gcd = " + std::to_string(g) +
                     ")");
  }
  PeriodFindingConfig cfg;
  cfg.a_base = base;
  cfg.modulus = modulus;
  cfg.t = t;
  cfg.shots = shots;
  cfg.seed = seed;
  const PeriodResult res = find_period(cfg);

  out << "base " << base << " modulus " << modulus << " t "
      << cfg.counting_bits() << " shots " << shots << " seed " << seed << "\n";
  std::vector<std::pair<std::uint64_t, std::uint64_t>> top(res.histogram.begin(),
                                                           res.histogram.end());
  std::stable_sort(top.begin(), top.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  out << res.histogram.size() << " distinct outcomes";
  if (top.size() > 8) {
    top.resize(8);
    out << ", top 8";
  }
  out << "\n";
  for (const auto& [value, count] : top) {
    out << "  " << value << " x" << count << "\n";
  }
  if (!res.success) {
    out << "period not found\n";
    return kExitUnverified;
  }
  const std::int64_t r = *res.candidate_period;
  out << "period " << r << " verified\n";
  if (factor) {
    const std::int64_t half = r % 2 == 0 ? mod_pow(base, r / 2, modulus) : 0;
    if (r % 2 != 0 || half == modulus - 1) {
      out << "no factors from this base (r odd or a^(r/2) = -1)\n";
    } else {
      const std::int64_t p = std::gcd(half - 1, modulus);
      const std::int64_t q = std::gcd(half + 1, modulus);
      out << "factors " << p << " " << q << "\n";
    }
  }
  return kExitOk;
}

inline int cmd_verify(const OperatorFlags& f, bool verbose, std::ostream& out) {
  const OperatorSpec spec = spec_from(f);
  if (spec.modulus > kExhaustiveModulusLimit) {
    throw UsageError("verify supports N <= " +
                     std::to_string(kExhaustiveModulusLimit));
  }
  VerifyOptions opts;
  opts.construction = construction_from(f.construction);
  const VerificationReport rep = verify_operator(spec, opts);
  if (verbose) {
    for (const CaseResult& c : rep.cases) {
      out << tuple_text(c.input) << " -> " << tuple_text(c.expected)
          << " fidelity " << c.fidelity << " clean " << c.ancilla_clean << " "
          << (c.pass ? "PASS" : "FAIL") << "\n";
    }
  }
  out << describe(spec) << ": " << rep.cases.size() << " cases, "
      << rep.passed() << " passed, " << rep.simulations << " simulations\n";
  return rep.all_pass() ? kExitOk : kExitUnverified;
}

inline void apply_qubit_ceiling_from_env() {
  const char* raw = std::getenv("QMOD_MAX_QUBITS");
  if (raw == nullptr || *raw == '\0') return;
  const auto v = parse_values(raw);
  if (v.size() != 1) throw UsageError("QMOD_MAX_QUBITS must be one integer");
  set_max_qubits(v[0]);
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Modular arithmetic circuits and period finding"};
  app.require_subcommand(1);

  OperatorFlags f;
  auto add_operator_flags = [&](CLI::App* cmd, bool needs_modulus) {
    cmd->add_option("--op", f.op, "operator name")->required();
    cmd->add_option("--k", f.k, "classical constant k");
    cmd->add_option("--base", f.base, "exponentiation base");
    auto* m = cmd->add_option("--modulus", f.modulus, "modulus N");
    if (needs_modulus) m->required();
    cmd->add_option("--exponent-bits", f.exponent_bits,
                    "exponent register width for exp (default n)");
    cmd->add_option("--construction", f.construction, "default or bitwise");
  };

  auto* build = app.add_subcommand("build", "emit the operator circuit as text");
  add_operator_flags(build, true);

  std::string input;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  auto* run = app.add_subcommand("run", "simulate the operator on a basis input");
  add_operator_flags(run, true);
  run->add_option("--input", input, "comma-separated register values")->required();
  run->add_option("--shots", shots, "0 prints the deterministic result");
  run->add_option("--seed", seed, "sampling seed");

  std::string sweep;
  auto* resources = app.add_subcommand("resources", "JSON resource report");
  add_operator_flags(resources, false);
  resources->add_option("--sweep", sweep, "nmin:nmax over N = 2^n - 1");

  std::int64_t base = 0;
  std::int64_t modulus = 0;
  std::size_t t = 0;
  std::uint64_t shor_shots = 1000;
  std::uint64_t shor_seed = 0;
  bool factor = false;
  auto* shor = app.add_subcommand("shor", "period finding for base mod N");
  shor->add_option("--base", base, "base a")->required();
  shor->add_option("--modulus", modulus, "modulus N")->required();
  shor->add_option("--t", t, "counting register width (default 2n)");
  shor->add_option("--shots", shor_shots, "measurement shots");
  shor->add_option("--seed", shor_seed, "sampling seed");
  shor->add_flag("--factor", factor, "derive factors from an even period");

  bool verbose = false;
  auto* verify = app.add_subcommand("verify", "compare against the truth table");
  add_operator_flags(verify, true);
  verify->add_flag("--verbose", verbose, "one line per case");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    apply_qubit_ceiling_from_env();
    if (*build) return cmd_build(f, out);
    if (*run) return cmd_run(f, input, shots, seed, out, err);
    if (*resources) return cmd_resources(f, sweep, out);
    if (*shor) return cmd_shor(base, modulus, t, shor_shots, shor_seed, factor, out);
    if (*verify) return cmd_verify(f, verbose, out);
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnverified;
  }
  return kExitUsage;
}

}  // namespace qmod::cli
