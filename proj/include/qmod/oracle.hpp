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
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "qmod/errors.hpp"
#include "qmod/operator_spec.hpp"

namespace qmod {

/// base^exp mod N by square-and-multiply. Exact for any N < 2^62.
inline std::int64_t mod_pow(std::int64_t base, std::int64_t exp,
                            std::int64_t modulus) {
  if (modulus <= 0) throw std::invalid_argument("mod_pow: modulus must be positive");
  if (exp < 0) throw std::invalid_argument("mod_pow: exponent must be non-negative");
  using Wide = unsigned __int128;
  const auto m = static_cast<std::uint64_t>(modulus);
  std::uint64_t b = static_cast<std::uint64_t>(((base % modulus) + modulus) % modulus);
  std::uint64_t result = 1 % m;
  for (auto e = static_cast<std::uint64_t>(exp); e != 0; e >>= 1) {
    if (e & 1) result = static_cast<std::uint64_t>(Wide(result) * b % m);
    b = static_cast<std::uint64_t>(Wide(b) * b % m);
  }
  return static_cast<std::int64_t>(result);
}

struct ExtendedGcd {
  std::int64_t g;  // gcd(a, b) >= 0
  std::int64_t s;
  std::int64_t t;  // s*a + t*b == g
};

inline ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) throw std::invalid_argument("extended_gcd(0, 0) is undefined");
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

/// The unique r in [1, N) with k*r = 1 (mod N).
inline std::int64_t mod_inv(std::int64_t k, std::int64_t modulus) {
  if (modulus < 2) throw std::invalid_argument("mod_inv: modulus must be at least 2");
  const std::int64_t reduced = ((k % modulus) + modulus) % modulus;
  if (reduced == 0) throw NonInvertibleError(k, modulus);
  const ExtendedGcd e = extended_gcd(reduced, modulus);
  if (e.g != 1) throw NonInvertibleError(k, modulus);
  return ((e.s % modulus) + modulus) % modulus;
}

struct TruthRow {
  std::vector<std::uint64_t> input;   // register values in ket order
  std::vector<std::uint64_t> output;  // every register of the result ket
};

struct TruthTable {
  OperatorSpec spec;
  std::vector<TruthRow> rows;
};

/// Classical image of one input tuple under the operator's defining map.
inline std::vector<std::uint64_t> apply_classically(
    const OperatorSpec& s, const std::vector<std::uint64_t>& in) {
  const auto N = static_cast<std::uint64_t>(s.modulus);
  const auto k = static_cast<std::uint64_t>(s.k);
  using Wide = unsigned __int128;
  auto mulmod = [N](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>(Wide(x) * y % N);
  };
  switch (s.kind) {
    case OperatorKind::kAddInConst: return {(in[0] + k) % N};
    case OperatorKind::kAddOutConst: return {in[0], (in[0] + k) % N};
    case OperatorKind::kAddInQQ: return {in[0], (in[0] + in[1]) % N};
    case OperatorKind::kAddOutQQ: return {in[0], in[1], (in[0] + in[1]) % N};
    case OperatorKind::kMultOutConst:
      return {in[0], (in[1] + mulmod(k, in[0])) % N};
    case OperatorKind::kMultInConst: return {mulmod(k, in[0])};
    case OperatorKind::kMultOutQQ: return {in[0], in[1], mulmod(in[0], in[1])};
    case OperatorKind::kExpOut:
      return {in[0], static_cast<std::uint64_t>(mod_pow(
                         s.a_base, static_cast<std::int64_t>(in[0]), s.modulus))};
  }
  throw std::logic_error("unhandled operator kind");
}

/// Upper bound of each input register (exclusive).
inline std::vector<std::uint64_t> input_bounds(const OperatorSpec& s) {
  const auto N = static_cast<std::uint64_t>(s.modulus);
  if (s.kind == OperatorKind::kExpOut) {
    return {std::uint64_t{1} << s.exponent_bits()};
  }
  return std::vector<std::uint64_t>(input_arity(s.kind), N);
}

inline constexpr std::int64_t kExhaustiveModulusLimit = 64;
inline constexpr std::size_t kExhaustiveRowLimit = 4096;
inline constexpr std::size_t kSampledRows = 256;

/// Exhaustive over every valid input when N <= 64 (and the input space has
/// at most 4096 tuples) or the space is no larger than the sample size;
/// otherwise 256 distinct inputs drawn with mt19937_64(seed).
inline TruthTable truth_table(const OperatorSpec& spec, std::uint64_t seed = 0) {
  spec.validate();
  TruthTable table{spec, {}};
  const std::vector<std::uint64_t> bounds = input_bounds(spec);
  std::uint64_t total = 1;
  for (std::uint64_t b : bounds) {
    total = (b > kExhaustiveRowLimit || total > kExhaustiveRowLimit / b)
                ? kExhaustiveRowLimit + 1
                : total * b;
  }
  const bool exhaustive =
      total <= kSampledRows || (spec.modulus <= kExhaustiveModulusLimit &&
                                total <= kExhaustiveRowLimit);
  if (exhaustive) {
    std::vector<std::uint64_t> in(bounds.size(), 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t r = bounds.size(); r-- > 0;) {
        in[r] = rest % bounds[r];
        rest /= bounds[r];
      }
      table.rows.push_back({in, apply_classically(spec, in)});
    }
    return table;
  }
  std::mt19937_64 rng(seed);
  std::set<std::vector<std::uint64_t>> seen;
  while (table.rows.size() < kSampledRows) {
    std::vector<std::uint64_t> in;
    for (std::uint64_t b : bounds) in.push_back(rng() % b);
    if (!seen.insert(in).second) continue;
    table.rows.push_back({in, apply_classically(spec, in)});
  }
  return table;
}

}  // namespace qmod
