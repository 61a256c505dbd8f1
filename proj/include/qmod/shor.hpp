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
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmod/errors.hpp"
#include "qmod/modarith.hpp"
#include "qmod/oracle.hpp"
#include "qmod/qft.hpp"
#include "qmod/statevector.hpp"

namespace qmod {

struct PeriodFindingConfig {
  std::int64_t a_base = 2;
  std::int64_t modulus = 15;
  /// Counting register width; 0 selects 2n. Use t = n for the 3n-wide
  /// exponent/work/aux arrangement.
  std::size_t t = 0;
  std::uint64_t shots = 1000;
  std::uint64_t seed = 0;

  std::size_t counting_bits() const {
    return t == 0 ? 2 * modulus_bits(modulus) : t;
  }

  void validate() const {
    OperatorSpec::exp_out(a_base, modulus, counting_bits());
    if (shots == 0) throw std::invalid_argument("shots must be at least 1");
  }
};

struct PeriodResult {
  std::optional<std::int64_t> candidate_period;
  std::map<std::uint64_t, std::uint64_t> histogram;  // counting-register outcomes
  bool success = false;
};

/// Hadamards on the counting wires, Exp(a, N) with the counting register as
/// exponent, then the inverse QFT on the counting wires. Measurement is left
/// to the caller.
inline OperatorCircuit period_finding_circuit(const PeriodFindingConfig& cfg) {
  cfg.validate();
  const std::size_t t = cfg.counting_bits();
  const std::size_t n = modulus_bits(cfg.modulus);
  const std::size_t width = t + n + (n + 1) + 1;
  if (width > max_qubits()) {
    throw CapacityError("period finding needs " + std::to_string(width) +
                        " qubits, ceiling is " + std::to_string(max_qubits()));
  }
  OperatorCircuit exp = exp_out(cfg.a_base, cfg.modulus, t);
  const auto counting = exp.layout.wires(Role::kDataA);
  CircuitBuilder b(exp.layout.num_wires(), "period_finding");
  for (Wire w : counting) b.add(Gate::h(w));
  b.append(exp.circuit);
  detail::append_iqft(b, counting);
  return {std::move(b).build(), exp.layout};
}

/// Exact probability of each counting-register outcome.
inline std::vector<double> counting_distribution(const PeriodFindingConfig& cfg) {
  OperatorCircuit pf = period_finding_circuit(cfg);
  StateVector s(pf.layout.num_wires());
  s.apply(pf.circuit);
  return register_distribution(s, pf.layout.wires(Role::kDataA));
}

/// Smallest convergent denominator d <= N of outcome / 2^t with
/// |outcome/2^t - c/d| <= 1/2^t. Convergents with numerator 0 carry no
/// period information and are skipped.
inline std::optional<std::int64_t> continued_fraction_period(
    std::uint64_t outcome, std::size_t t, std::int64_t modulus) {
  if (t == 0 || t > 62) throw std::invalid_argument("counting width must be in [1, 62]");
  const std::uint64_t denom = std::uint64_t{1} << t;
  if (outcome >= denom) throw std::invalid_argument("outcome out of range");
  using Wide = __int128;
  // Convergents h/k of outcome/denom.
  Wide h_prev = 0, h = 1, k_prev = 1, k = 0;
  std::uint64_t num = outcome, den = denom;
  while (true) {
    const std::uint64_t q = num / den;
    const Wide h_next = Wide(q) * h + h_prev;
    const Wide k_next = Wide(q) * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    if (k > modulus) break;
    if (h != 0) {
      Wide err = Wide(outcome) * k - h * Wide(denom);
      if (err < 0) err = -err;
      if (err <= k) return static_cast<std::int64_t>(k);
    }
    const std::uint64_t rem = num % den;
    if (rem == 0) break;
    num = den;
    den = rem;
  }
  return std::nullopt;
}

namespace detail {

// Drops prime factors from a verified period while a^(r/p) = 1 still holds.
inline std::int64_t minimize_period(std::int64_t a, std::int64_t r,
                                    std::int64_t modulus) {
  std::int64_t rest = r;
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    primes.push_back(p);
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) primes.push_back(rest);
  for (std::int64_t p : primes) {
    while (r % p == 0 && mod_pow(a, r / p, modulus) == 1) r /= p;
  }
  return r;
}

}  // namespace detail

/// Simulates once, samples cfg.shots counting-register outcomes and runs
/// continued-fraction extraction on each in draw order. Failed candidates are
/// combined by lcm; the first verified value is reduced to the true order.
inline PeriodResult find_period(const PeriodFindingConfig& cfg) {
  OperatorCircuit pf = period_finding_circuit(cfg);
  StateVector s(pf.layout.num_wires());
  s.apply(pf.circuit);
  const std::size_t t = cfg.counting_bits();

  PeriodResult result;
  std::vector<std::uint64_t> outcomes;
  for (std::uint64_t basis : sample_outcomes(s, cfg.shots, cfg.seed)) {
    const std::uint64_t value = pf.layout.read(basis, Role::kDataA);
    ++result.histogram[value];
    outcomes.push_back(value);
  }

  auto verified = [&](std::int64_t r) {
    return r >= 1 && mod_pow(cfg.a_base, r, cfg.modulus) == 1;
  };
  std::int64_t combined = 1;
  for (std::uint64_t value : outcomes) {
    // Outcome 0 is the c = 0 peak: consistent only with r = 1.
    std::optional<std::int64_t> d =
        value == 0 ? std::optional<std::int64_t>(1)
                   : continued_fraction_period(value, t, cfg.modulus);
    if (!d) continue;
    if (verified(*d)) {
      result.candidate_period = *d;
      break;
    }
    const std::int64_t l = std::lcm(combined, *d);
    if (verified(l)) {
      result.candidate_period = l;
      break;
    }
    combined = l <= cfg.modulus ? l : *d;
  }
  if (result.candidate_period) {
    result.candidate_period =
        detail::minimize_period(cfg.a_base, *result.candidate_period, cfg.modulus);
    result.success = true;
  }
  return result;
}

}  // namespace qmod
