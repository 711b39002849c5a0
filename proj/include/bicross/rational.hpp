// Copyright 2026 The bicross Authors
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

#ifndef BICROSS_RATIONAL_HPP_
#define BICROSS_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace bicross {

// Exact coordinate type. mpq_class keeps values canonical (reduced,
// positive denominator) after every arithmetic operation.
using Coord = mpq_class;

// Parses "num" or "num/den" (optional leading '-'). Throws kParse.
Coord parse_coord(std::string_view text);

// Canonical text form: "num" when the denominator is 1, else "num/den".
std::string format_coord(const Coord& value);

// numerator / 2^bits, reduced.
Coord dyadic(const mpz_class& numerator, unsigned bits);

// Nearest dyadic rational with `bits` fractional bits to a double.
Coord dyadic_from_double(double value, unsigned bits);

double to_double(const Coord& value);

// Floor and ceiling of a rational as an integer.
mpz_class floor_of(const Coord& value);
mpz_class ceil_of(const Coord& value);

// Smallest integer t >= 0 with t*t >= value (value >= 0).
mpz_class ceil_sqrt(const Coord& value);

// Deterministic 64-bit generator used everywhere randomness is needed.
// Wraps std::mt19937_64, whose output sequence is fixed by the standard.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform dyadic rational in [0, 1) with `bits` (<= 64) fractional bits.
  Coord unit_dyadic(unsigned bits = 53);

  // Uniform dyadic rational in [-1, 1) with `bits` fractional bits.
  Coord signed_unit_dyadic(unsigned bits = 53);

  // Uniform double in [0, 1).
  double unit_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer, used to derive independent child seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

}  // namespace bicross

#endif  // BICROSS_RATIONAL_HPP_
