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

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "adelic/rational.hpp"
#include "adelic/real.hpp"

namespace adelic {

namespace internal {

// Brackets for log p are cached per (prime, precision).
inline const RealInterval& log_prime_bracket(std::uint64_t p, long bits) {
  thread_local std::map<std::pair<std::uint64_t, long>, RealInterval> cache;
  auto key = std::make_pair(p, bits);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, RealInterval::log_of(BigInt(static_cast<unsigned long>(p)), bits)).first;
  }
  return it->second;
}

constexpr long kMaxSignPrecisionBits = 1 << 14;

}  // namespace internal

// An element a + sum_p b_p log p of the Q-span of 1 and the logarithms of
// primes. The value is zero exactly when every coefficient is zero; signs of
// nonzero values are found by widening the bracket precision.
class LogLinear {
 public:
  LogLinear() = default;
  LogLinear(const Rational& c) : constant_(c) {}  // NOLINT(google-explicit-constructor)
  LogLinear(int c) : constant_(c) {}  // NOLINT(google-explicit-constructor)

  // c * log p.
  static LogLinear log_unit(std::uint64_t p, const Rational& c = Rational(1)) {
    LogLinear out;
    if (!c.is_zero()) out.logs_.emplace(p, c);
    return out;
  }

  const Rational& constant() const { return constant_; }
  const std::map<std::uint64_t, Rational>& logs() const { return logs_; }
  Rational log_coefficient(std::uint64_t p) const {
    auto it = logs_.find(p);
    return it == logs_.end() ? Rational(0) : it->second;
  }

  bool is_rational() const { return logs_.empty(); }
  bool is_zero() const { return logs_.empty() && constant_.is_zero(); }
  std::optional<Rational> rational() const {
    if (!is_rational()) return std::nullopt;
    return constant_;
  }

  RealInterval bracket(long bits = default_precision_bits()) const {
    RealInterval out = RealInterval::from_rational(constant_, bits);
    for (const auto& [p, c] : logs_) {
      out = out + RealInterval::from_rational(c, bits) * internal::log_prime_bracket(p, bits);
    }
    return out;
  }
  double to_double() const { return bracket().midpoint(); }

  int sign() const {
    if (is_rational()) return constant_.sign();
    for (long bits = std::max<long>(default_precision_bits(), 64);; bits *= 2) {
      RealInterval b = bracket(bits);
      if (b.certainly_positive()) return 1;
      if (b.certainly_negative()) return -1;
      if (bits > internal::kMaxSignPrecisionBits) {
        throw Error(ErrorCode::kInvalidArgument, "sign of a log-linear value did not separate");
      }
    }
  }

  // Returns lambda with a = lambda * b when it exists (b != 0).
  static std::optional<Rational> ratio(const LogLinear& a, const LogLinear& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return Rational(0);
    Rational lambda;
    if (!b.constant_.is_zero()) {
      lambda = a.constant_ / b.constant_;
    } else {
      const auto& [p, c] = *b.logs_.begin();
      lambda = a.log_coefficient(p) / c;
    }
    if (a == b * lambda) return lambda;
    return std::nullopt;
  }

  std::string to_string() const {
    std::string out;
    if (!constant_.is_zero() || logs_.empty()) out = constant_.to_string();
    for (const auto& [p, c] : logs_) {
      std::string term = (c == Rational(1) ? std::string() : c.to_string() + "*") +
                         "log(" + std::to_string(p) + ")";
      if (out.empty()) {
        out = term;
      } else if (term[0] == '-') {
        out += term;
      } else {
        out += "+" + term;
      }
    }
    return out;
  }

  LogLinear operator-() const {
    LogLinear out;
    out.constant_ = -constant_;
    for (const auto& [p, c] : logs_) out.logs_.emplace(p, -c);
    return out;
  }
  LogLinear& operator+=(const LogLinear& o) {
    constant_ += o.constant_;
    for (const auto& [p, c] : o.logs_) {
      Rational v = log_coefficient(p) + c;
      if (v.is_zero()) {
        logs_.erase(p);
      } else {
        logs_[p] = v;
      }
    }
    return *this;
  }
  LogLinear& operator-=(const LogLinear& o) { return *this += -o; }
  LogLinear& operator*=(const Rational& s) {
    if (s.is_zero()) {
      logs_.clear();
      constant_ = Rational(0);
      return *this;
    }
    constant_ *= s;
    for (auto& [p, c] : logs_) c *= s;
    return *this;
  }
  LogLinear& operator/=(const Rational& s) { return *this *= Rational(1) / s; }

  friend LogLinear operator+(LogLinear a, const LogLinear& b) { return a += b; }
  friend LogLinear operator-(LogLinear a, const LogLinear& b) { return a -= b; }
  friend LogLinear operator*(LogLinear a, const Rational& s) { return a *= s; }
  friend LogLinear operator*(const Rational& s, LogLinear a) { return a *= s; }
  friend LogLinear operator/(LogLinear a, const Rational& s) { return a /= s; }

  friend bool operator==(const LogLinear& a, const LogLinear& b) {
    return a.constant_ == b.constant_ && a.logs_ == b.logs_;
  }
  friend bool operator<(const LogLinear& a, const LogLinear& b) { return (a - b).sign() < 0; }
  friend bool operator>(const LogLinear& a, const LogLinear& b) { return b < a; }
  friend bool operator<=(const LogLinear& a, const LogLinear& b) { return !(b < a); }
  friend bool operator>=(const LogLinear& a, const LogLinear& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const LogLinear& v) {
    return os << v.to_string();
  }

 private:
  Rational constant_;
  std::map<std::uint64_t, Rational> logs_;
};

inline int sign(const LogLinear& v) { return v.sign(); }

// A rational upper bound; an integer when logs are present.
inline Rational rational_upper_bound(const LogLinear& v) {
  if (v.is_rational()) return v.constant();
  return Rational(v.bracket().ceil_upper());
}

// An exact real of the form  L + sum_i c_i * n_i^2 / d_i  with L, n_i, d_i
// log-linear and c_i rational. Areas of triangles cut off by a zero crossing
// at an irrational abscissa have this shape; everything else stays in L.
class ExactReal {
 public:
  struct Term {
    Rational coefficient;
    LogLinear numerator;
    LogLinear denominator;
    friend bool operator==(const Term&, const Term&) = default;
  };

  ExactReal() = default;
  ExactReal(const LogLinear& v) : linear_(v) {}  // NOLINT(google-explicit-constructor)
  ExactReal(const Rational& v) : linear_(v) {}  // NOLINT(google-explicit-constructor)
  ExactReal(int v) : linear_(Rational(v)) {}  // NOLINT(google-explicit-constructor)

  // c * n^2 / d, folded into the linear part when n/d is rational.
  static ExactReal quadratic_term(const Rational& c, const LogLinear& n, const LogLinear& d) {
    if (d.is_zero()) throw Error(ErrorCode::kInvalidArgument, "zero denominator in quadratic term");
    if (auto lambda = LogLinear::ratio(n, d)) return ExactReal(n * (c * *lambda));
    ExactReal out;
    out.terms_.push_back(normalized(Term{c, n, d}));
    return out;
  }

  const LogLinear& linear() const { return linear_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_log_linear() const { return terms_.empty(); }
  std::optional<LogLinear> log_linear() const {
    if (!terms_.empty()) return std::nullopt;
    return linear_;
  }
  std::optional<Rational> rational() const {
    if (!terms_.empty()) return std::nullopt;
    return linear_.rational();
  }

  RealInterval bracket(long bits = default_precision_bits()) const {
    RealInterval out = linear_.bracket(bits);
    for (const auto& t : terms_) {
      RealInterval n = t.numerator.bracket(bits);
      out = out + RealInterval::from_rational(t.coefficient, bits) * n * n / t.denominator.bracket(bits);
    }
    return out;
  }
  double to_double() const { return bracket().midpoint(); }

  // Sign with precision widening. A value that does not separate from zero
  // at the precision cap is reported as zero.
  int sign() const {
    if (terms_.empty()) return linear_.sign();
    for (long bits = std::max<long>(default_precision_bits(), 64); bits <= internal::kMaxSignPrecisionBits;
         bits *= 2) {
      RealInterval b = bracket(bits);
      if (b.certainly_positive()) return 1;
      if (b.certainly_negative()) return -1;
    }
    return 0;
  }

  std::string to_string() const {
    std::string out = linear_.is_zero() && !terms_.empty() ? "" : linear_.to_string();
    for (const auto& t : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + t.coefficient.to_string() + ")*(" + t.numerator.to_string() + ")^2/(" +
             t.denominator.to_string() + ")";
    }
    return out;
  }

  ExactReal operator-() const {
    ExactReal out;
    out.linear_ = -linear_;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.coefficient = -t.coefficient;
    return out;
  }
  ExactReal& operator+=(const ExactReal& o) {
    linear_ += o.linear_;
    for (const auto& t : o.terms_) add_term(t);
    return *this;
  }
  ExactReal& operator-=(const ExactReal& o) { return *this += -o; }
  ExactReal& operator*=(const Rational& s) {
    linear_ *= s;
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.coefficient *= s;
    return *this;
  }

  friend ExactReal operator+(ExactReal a, const ExactReal& b) { return a += b; }
  friend ExactReal operator-(ExactReal a, const ExactReal& b) { return a -= b; }
  friend ExactReal operator*(ExactReal a, const Rational& s) { return a *= s; }
  friend ExactReal operator*(const Rational& s, ExactReal a) { return a *= s; }

  // Structural equality of canonical forms. Equal structure implies equal
  // values; the converse is not claimed.
  friend bool operator==(const ExactReal& a, const ExactReal& b) {
    return a.linear_ == b.linear_ && a.terms_ == b.terms_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactReal& v) { return os << v.to_string(); }

 private:
  // Scales numerator and denominator so that their leading coefficient is 1,
  // moving the factors into the rational coefficient.
  static Term normalized(Term t) {
    auto leading = [](const LogLinear& v) {
      return v.constant().is_zero() ? v.logs().begin()->second : v.constant();
    };
    Rational mu = leading(t.numerator);
    Rational kappa = leading(t.denominator);
    t.numerator /= mu;
    t.denominator /= kappa;
    t.coefficient = t.coefficient * mu * mu / kappa;
    return t;
  }

  static bool term_less(const Term& a, const Term& b) {
    return std::make_pair(a.numerator.to_string(), a.denominator.to_string()) <
           std::make_pair(b.numerator.to_string(), b.denominator.to_string());
  }

  void add_term(const Term& t) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t, term_less);
    if (it != terms_.end() && it->numerator == t.numerator && it->denominator == t.denominator) {
      it->coefficient += t.coefficient;
      if (it->coefficient.is_zero()) terms_.erase(it);
      return;
    }
    terms_.insert(it, t);
  }

  LogLinear linear_;
  std::vector<Term> terms_;  // sorted, normalized, nonzero coefficients
};

inline int sign(const ExactReal& v) { return v.sign(); }

}  // namespace adelic
