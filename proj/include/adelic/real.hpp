// Copyright 2026 The adelic-volumes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Certified real brackets on top of MPFR with directed rounding. Every
// transcendental quantity (log p, exp of a roof value) enters the library
// through this header; nothing here is used for geometry.

#pragma once

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

#include "adelic/rational.hpp"

namespace adelic {

constexpr long kMinPrecisionBits = 64;
constexpr long kDefaultPrecisionBits = 128;

// Working precision for certified brackets. ADELIC_PRECISION_BITS overrides
// the default; values below 64 bits are raised to 64.
inline long default_precision_bits() {
  static const long bits = [] {
    const char* env = std::getenv("ADELIC_PRECISION_BITS");
    long value = kDefaultPrecisionBits;
    if (env != nullptr) {
      char* end = nullptr;
      long parsed = std::strtol(env, &end, 10);
      if (end != env && parsed > 0) value = parsed;
    }
    return std::max(value, kMinPrecisionBits);
  }();
  return bits;
}

// RAII owner of one mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(long bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept : BigFloat(mpfr_get_prec(o.v_)) { mpfr_swap(v_, o.v_); }
  BigFloat& operator=(BigFloat o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  long precision() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

// Closed interval [lo, hi] of reals that is guaranteed to contain the exact
// value it represents.
class RealInterval {
 public:
  explicit RealInterval(long bits = default_precision_bits()) : lo_(bits), hi_(bits) {}

  static RealInterval from_rational(const Rational& q, long bits = default_precision_bits()) {
    RealInterval r(bits);
    mpfr_set_q(r.lo_.get(), q.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.get(), q.raw().get_mpq_t(), MPFR_RNDU);
    return r;
  }

  // [lo, hi] for rationals lo <= hi.
  static RealInterval hull(const Rational& lo, const Rational& hi, long bits = default_precision_bits()) {
    RealInterval r(bits);
    mpfr_set_q(r.lo_.get(), lo.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.get(), hi.raw().get_mpq_t(), MPFR_RNDU);
    return r;
  }

  static RealInterval from_integer(const BigInt& z, long bits = default_precision_bits()) {
    RealInterval r(bits);
    mpfr_set_z(r.lo_.get(), z.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_.get(), z.get_mpz_t(), MPFR_RNDU);
    return r;
  }

  // Natural logarithm of a positive integer.
  static RealInterval log_of(const BigInt& z, long bits = default_precision_bits()) {
    if (z <= 0) throw Error(ErrorCode::kInvalidArgument, "log of a non-positive integer");
    RealInterval arg = from_integer(z, bits + 64);
    RealInterval r(bits);
    mpfr_log(r.lo_.get(), arg.lo_.get(), MPFR_RNDD);
    mpfr_log(r.hi_.get(), arg.hi_.get(), MPFR_RNDU);
    return r;
  }

  long precision() const { return lo_.precision(); }
  double lower() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
  double upper() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }
  double midpoint() const {
    BigFloat m(precision() + 1);
    mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    return m.to_double();
  }
  double width() const {
    BigFloat w(precision());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return w.to_double();
  }

  // Smallest integer >= hi.
  BigInt ceil_upper() const {
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), hi_.get(), MPFR_RNDU);
    return z;
  }
  // Largest integer <= lo.
  BigInt floor_lower() const {
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), lo_.get(), MPFR_RNDD);
    return z;
  }

  bool certainly_positive() const { return mpfr_sgn(lo_.get()) > 0; }
  bool certainly_negative() const { return mpfr_sgn(hi_.get()) < 0; }
  bool contains_zero() const { return !certainly_positive() && !certainly_negative(); }

  // Floor of the represented value when the bracket determines it.
  std::pair<bool, BigInt> floor_if_determined() const {
    BigInt a;
    BigInt b;
    mpfr_get_z(a.get_mpz_t(), lo_.get(), MPFR_RNDD);
    mpfr_get_z(b.get_mpz_t(), hi_.get(), MPFR_RNDD);
    return {a == b, a};
  }

  friend RealInterval operator+(const RealInterval& a, const RealInterval& b) {
    RealInterval r(std::min(a.precision(), b.precision()));
    mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return r;
  }

  friend RealInterval operator-(const RealInterval& a, const RealInterval& b) {
    RealInterval r(std::min(a.precision(), b.precision()));
    mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
    mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
    return r;
  }

  RealInterval operator-() const {
    RealInterval r(precision());
    mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
    mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
    return r;
  }

  friend RealInterval operator*(const RealInterval& a, const RealInterval& b) {
    long bits = std::min(a.precision(), b.precision());
    RealInterval r(bits);
    BigFloat t(bits);
    const mpfr_srcptr xs[2] = {a.lo_.get(), a.hi_.get()};
    const mpfr_srcptr ys[2] = {b.lo_.get(), b.hi_.get()};
    bool first = true;
    for (auto x : xs) {
      for (auto y : ys) {
        mpfr_mul(t.get(), x, y, MPFR_RNDD);
        if (first || mpfr_less_p(t.get(), r.lo_.get())) mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
        mpfr_mul(t.get(), x, y, MPFR_RNDU);
        if (first || mpfr_greater_p(t.get(), r.hi_.get())) mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
        first = false;
      }
    }
    return r;
  }

  friend RealInterval operator/(const RealInterval& a, const RealInterval& b) {
    if (b.contains_zero()) {
      throw Error(ErrorCode::kInvalidArgument, "interval division by a bracket containing zero");
    }
    long bits = std::min(a.precision(), b.precision());
    RealInterval r(bits);
    BigFloat t(bits);
    const mpfr_srcptr xs[2] = {a.lo_.get(), a.hi_.get()};
    const mpfr_srcptr ys[2] = {b.lo_.get(), b.hi_.get()};
    bool first = true;
    for (auto x : xs) {
      for (auto y : ys) {
        mpfr_div(t.get(), x, y, MPFR_RNDD);
        if (first || mpfr_less_p(t.get(), r.lo_.get())) mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
        mpfr_div(t.get(), x, y, MPFR_RNDU);
        if (first || mpfr_greater_p(t.get(), r.hi_.get())) mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
        first = false;
      }
    }
    return r;
  }

  RealInterval exp() const {
    RealInterval r(precision());
    mpfr_exp(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_exp(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
  }

  // Square root of the nonnegative part; a bracket that is certainly negative
  // is an error.
  RealInterval sqrt() const {
    if (certainly_negative()) throw Error(ErrorCode::kInvalidArgument, "sqrt of a negative bracket");
    RealInterval r(precision());
    if (mpfr_sgn(lo_.get()) < 0) {
      mpfr_set_zero(r.lo_.get(), 1);
    } else {
      mpfr_sqrt(r.lo_.get(), lo_.get(), MPFR_RNDD);
    }
    mpfr_sqrt(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
  }

  std::string to_string(int digits = 20) const {
    char buf[256];
    mpfr_snprintf(buf, sizeof(buf), "%.*Rg", digits, mpfr_srcptr(mid_value().get()));
    return buf;
  }

 private:
  BigFloat mid_value() const {
    BigFloat m(precision() + 1);
    mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    return m;
  }

  BigFloat lo_;
  BigFloat hi_;
};

}  // namespace adelic
