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

#include "bicross/radical_sum.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bicross/errors.hpp"

namespace bicross {

namespace {

// RAII holder for one mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(long precision) { mpfr_init2(v_, precision); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// Encloses sum sqrt(r_i) in [lo, hi] with directed rounding.
void enclose(const std::vector<Coord>& terms, Mpfr& lo, Mpfr& hi, long precision) {
  Mpfr t(precision);
  mpfr_set_zero(lo.get(), 1);
  mpfr_set_zero(hi.get(), 1);
  for (const Coord& r : terms) {
    mpfr_set_q(t.get(), r.get_mpq_t(), MPFR_RNDD);
    mpfr_sqrt(t.get(), t.get(), MPFR_RNDD);
    mpfr_add(lo.get(), lo.get(), t.get(), MPFR_RNDD);
    mpfr_set_q(t.get(), r.get_mpq_t(), MPFR_RNDU);
    mpfr_sqrt(t.get(), t.get(), MPFR_RNDU);
    mpfr_add(hi.get(), hi.get(), t.get(), MPFR_RNDU);
  }
}

}  // namespace

RadicalSum::RadicalSum(std::vector<Coord> radicands) {
  for (const Coord& r : radicands) add(r);
}

void RadicalSum::add(const Coord& radicand) {
  if (radicand < 0) throw Error(ErrorCode::kInvalidArgument, "negative radicand");
  if (radicand == 0) return;
  radicands_.insert(std::upper_bound(radicands_.begin(), radicands_.end(), radicand), radicand);
}

double RadicalSum::approx() const {
  double s = 0;
  for (const Coord& r : radicands_) s += std::sqrt(to_double(r));
  return s;
}

std::string RadicalSum::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < radicands_.size(); ++i) {
    out << (i ? " + " : "") << "sqrt(" << format_coord(radicands_[i]) << ")";
  }
  if (radicands_.empty()) out << "0";
  return out.str();
}

int compare(const RadicalSum& a, const RadicalSum& b) {
  std::vector<Coord> left, right;
  std::set_difference(a.radicands().begin(), a.radicands().end(), b.radicands().begin(),
                      b.radicands().end(), std::back_inserter(left));
  std::set_difference(b.radicands().begin(), b.radicands().end(), a.radicands().begin(),
                      a.radicands().end(), std::back_inserter(right));
  if (left.empty() && right.empty()) return 0;
  if (left.empty()) return -1;
  if (right.empty()) return 1;
  // Double sums carry relative error below 2^-48 for the term counts used
  // here, so a relative gap of 1e-9 decides the sign safely.
  double da = 0, db = 0;
  for (const Coord& r : left) da += std::sqrt(to_double(r));
  for (const Coord& r : right) db += std::sqrt(to_double(r));
  if (std::abs(da - db) > 1e-9 * (da + db)) return da < db ? -1 : 1;
  for (long precision = kMinRadicalPrecision;; precision = std::min(2 * precision, kMaxRadicalPrecision)) {
    Mpfr alo(precision), ahi(precision), blo(precision), bhi(precision);
    enclose(left, alo, ahi, precision);
    enclose(right, blo, bhi, precision);
    if (mpfr_less_p(ahi.get(), blo.get())) return -1;
    if (mpfr_less_p(bhi.get(), alo.get())) return 1;
    if (precision == kMaxRadicalPrecision) break;
  }
  throw Error(ErrorCode::kIndistinguishableAtPrecision,
              "radical sums agree to " + std::to_string(kMaxRadicalPrecision) + " bits");
}

RadicalSum tree_length(const PointSet& points, const Tree& tree) {
  RadicalSum s;
  for (const Segment& e : tree.edges) s.add(squared_length(points, e));
  return s;
}

}  // namespace bicross
