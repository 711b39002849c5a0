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

#include "bicross/rational.hpp"

#include <cmath>

#include "bicross/errors.hpp"

namespace bicross {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDegenerateIntersection: return "DegenerateIntersection";
    case ErrorCode::kNonGenericInput: return "NonGenericInput";
    case ErrorCode::kEmptyColorClass: return "EmptyColorClass";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kNotConvexPosition: return "NotConvexPosition";
    case ErrorCode::kNotFlat: return "NotFlat";
    case ErrorCode::kTooFewPoints: return "TooFewPoints";
    case ErrorCode::kNotLabeledGrid: return "NotLabeledGrid";
    case ErrorCode::kDoesNotFill: return "DoesNotFill";
    case ErrorCode::kNoRichCells: return "NoRichCells";
    case ErrorCode::kGenerationFailed: return "GenerationFailed";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kSearchExhausted: return "SearchExhausted";
    case ErrorCode::kIndistinguishableAtPrecision: return "IndistinguishableAtPrecision";
    case ErrorCode::kInternalInvariantViolation: return "InternalInvariantViolation";
  }
  return "Unknown";
}

namespace {

bool parse_integer(std::string_view text, mpz_class& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Coord parse_coord(std::string_view text) {
  auto slash = text.find('/');
  mpz_class num, den = 1;
  bool ok = parse_integer(text.substr(0, slash), num);
  if (ok && slash != std::string_view::npos) {
    ok = parse_integer(text.substr(slash + 1), den) && den > 0;
  }
  if (!ok) {
    throw Error(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");
  }
  Coord value(num, den);
  value.canonicalize();
  return value;
}

std::string format_coord(const Coord& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Coord dyadic(const mpz_class& numerator, unsigned bits) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
  Coord value(numerator, den);
  value.canonicalize();
  return value;
}

Coord dyadic_from_double(double value, unsigned bits) {
  double scaled = std::nearbyint(std::ldexp(value, static_cast<int>(bits)));
  mpz_class num(scaled);
  return dyadic(num, bits);
}

double to_double(const Coord& value) { return value.get_d(); }

mpz_class floor_of(const Coord& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

mpz_class ceil_of(const Coord& value) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

mpz_class ceil_sqrt(const Coord& value) {
  if (value <= 0) return 0;
  mpz_class t = ceil_of(value);
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), t.get_mpz_t());
  // root is within one of the answer; walk to the smallest valid t.
  while (root > 0 && Coord(mpz_class(root - 1) * (root - 1)) >= value) --root;
  while (Coord(root * root) < value) ++root;
  return root;
}

Coord Rng::unit_dyadic(unsigned bits) {
  std::uint64_t draw = next();
  if (bits < 64) draw >>= (64 - bits);
  mpz_class num;
  mpz_import(num.get_mpz_t(), 1, -1, sizeof(draw), 0, 0, &draw);
  return dyadic(num, bits);
}

Coord Rng::signed_unit_dyadic(unsigned bits) {
  return 2 * unit_dyadic(bits) - 1;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling on raw draws; std::uniform_int_distribution is
  // implementation-defined and would break cross-platform determinism.
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t draw;
  do {
    draw = next();
  } while (draw >= limit);
  return draw % bound;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  auto splitmix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return splitmix(splitmix(splitmix(seed) ^ a) ^ (b * 0x632be59bd9b4e019ULL));
}

}  // namespace bicross
