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
#include <stdexcept>
#include <string>

namespace qmod {

/// A constant has no inverse modulo N, so the requested in-place map is not
/// a bijection on residues.
class NonInvertibleError : public std::invalid_argument {
 public:
  NonInvertibleError(std::int64_t value, std::int64_t modulus)
      : std::invalid_argument("constant " + std::to_string(value) +
                              " is not invertible modulo " +
                              std::to_string(modulus) + " (gcd = " +
                              std::to_string(gcd_of(value, modulus)) + ")"),
        value_(value),
        modulus_(modulus) {}

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return modulus_; }

 private:
  static std::int64_t gcd_of(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      std::int64_t t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  std::int64_t value_;
  std::int64_t modulus_;
};

/// Requested register widths exceed the simulator qubit ceiling.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qmod
