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

// Closed points of the projective line over Q, R-divisors, base conditions
// and factored rational functions. On a curve every discrete valuation of
// the function field is the order of vanishing at a closed point, so a
// ClosedPoint doubles as the valuation it defines.

#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "adelic/error.hpp"
#include "adelic/polynomial.hpp"
#include "adelic/rational.hpp"

namespace adelic {

class ClosedPoint {
 public:
  enum class Kind { kZero, kInfinity, kFinite };

  static ClosedPoint zero() { return ClosedPoint(Kind::kZero, Polynomial()); }
  static ClosedPoint infinity() { return ClosedPoint(Kind::kInfinity, Polynomial()); }

  // The point cut out by an irreducible polynomial; normalized to monic form.
  // The monomial t is the point Zero and is rejected here.
  static ClosedPoint finite(const Polynomial& poly, int degree_bound = kDefaultIrreducibilityDegreeBound) {
    if (poly.degree() < 1) throw Error(ErrorCode::kInvalidPolynomial, "constant polynomial '" + poly.to_string() + "'");
    Polynomial m = poly.monic();
    if (m == Polynomial::t()) throw Error(ErrorCode::kInvalidPolynomial, "t defines the point Zero");
    if (!is_irreducible(m, degree_bound)) {
      throw Error(ErrorCode::kInvalidPolynomial, "'" + m.to_string() + "' is reducible over Q");
    }
    return ClosedPoint(Kind::kFinite, std::move(m));
  }

  // "0" (or "t"), "inf", or an irreducible polynomial in t.
  static ClosedPoint parse(std::string_view text) {
    std::string s;
    for (char ch : text) {
      if (ch != ' ') s.push_back(ch);
    }
    if (s == "0") return zero();
    if (s == "inf" || s == "infinity") return infinity();
    Polynomial p = Polynomial::parse(s);
    if (p.degree() >= 1 && p.monic() == Polynomial::t()) return zero();
    return finite(p);
  }

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::kZero; }
  bool is_infinity() const { return kind_ == Kind::kInfinity; }
  bool is_toric() const { return kind_ != Kind::kFinite; }
  const Polynomial& polynomial() const { return poly_; }
  int residue_degree() const { return kind_ == Kind::kFinite ? poly_.degree() : 1; }

  std::string to_string() const {
    switch (kind_) {
      case Kind::kZero: return "0";
      case Kind::kInfinity: return "inf";
      case Kind::kFinite: return poly_.to_string();
    }
    return "?";
  }

  friend bool operator==(const ClosedPoint&, const ClosedPoint&) = default;
  friend std::strong_ordering operator<=>(const ClosedPoint& a, const ClosedPoint& b) {
    if (auto c = static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_); c != 0) return c;
    return a.poly_ <=> b.poly_;
  }

 private:
  ClosedPoint(Kind kind, Polynomial poly) : kind_(kind), poly_(std::move(poly)) {}

  Kind kind_;
  Polynomial poly_;
};

// A finitely supported map ClosedPoint -> Rational with zero entries dropped,
// tagged by its role.
template <class Tag>
class PointMap {
 public:
  PointMap() = default;
  PointMap(std::initializer_list<std::pair<const ClosedPoint, Rational>> entries) {
    for (const auto& [p, c] : entries) add(p, c);
  }

  const std::map<ClosedPoint, Rational>& entries() const { return m_; }
  bool is_zero() const { return m_.empty(); }

  Rational at(const ClosedPoint& p) const {
    auto it = m_.find(p);
    return it == m_.end() ? Rational(0) : it->second;
  }

  PointMap& add(const ClosedPoint& p, const Rational& c) {
    Rational v = at(p) + c;
    if (v.is_zero()) {
      m_.erase(p);
    } else {
      m_[p] = v;
    }
    return *this;
  }

  PointMap& operator+=(const PointMap& o) {
    for (const auto& [p, c] : o.m_) add(p, c);
    return *this;
  }
  PointMap& operator-=(const PointMap& o) {
    for (const auto& [p, c] : o.m_) add(p, -c);
    return *this;
  }
  PointMap scaled(const Rational& a) const {
    PointMap out;
    for (const auto& [p, c] : m_) out.add(p, a * c);
    return out;
  }
  friend PointMap operator+(PointMap a, const PointMap& b) { return a += b; }
  friend PointMap operator-(PointMap a, const PointMap& b) { return a -= b; }
  friend bool operator==(const PointMap&, const PointMap&) = default;

  // sum_p coefficient(p) * residue_degree(p)
  Rational weighted_degree() const {
    Rational d(0);
    for (const auto& [p, c] : m_) d += c * Rational(p.residue_degree());
    return d;
  }

  bool is_effective() const {
    for (const auto& [p, c] : m_) {
      if (c.sign() < 0) return false;
    }
    return true;
  }

  // Entries at points other than Zero and Infinity with positive value.
  bool has_positive_nontoric() const {
    for (const auto& [p, c] : m_) {
      if (!p.is_toric() && c.sign() > 0) return true;
    }
    return false;
  }

  std::string to_string() const {
    if (m_.empty()) return "0";
    std::string out;
    for (const auto& [p, c] : m_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")[" + p.to_string() + "]";
    }
    return out;
  }

 private:
  std::map<ClosedPoint, Rational> m_;
};

struct DivisorTag {};
struct BaseTag {};
using RDivisor = PointMap<DivisorTag>;
using BaseCondition = PointMap<BaseTag>;

template <class Tag>
Rational ord(const PointMap<Tag>& d, const ClosedPoint& p) {
  return d.at(p);
}

template <class Tag>
PointMap<Tag> positive_part(const PointMap<Tag>& v) {
  PointMap<Tag> out;
  for (const auto& [p, c] : v.entries()) {
    if (c.sign() > 0) out.add(p, c);
  }
  return out;
}

template <class Tag>
PointMap<Tag> negative_part(const PointMap<Tag>& v) {
  PointMap<Tag> out;
  for (const auto& [p, c] : v.entries()) {
    if (c.sign() < 0) out.add(p, -c);
  }
  return out;
}

template <class Tag>
std::set<ClosedPoint> support(const PointMap<Tag>& v) {
  std::set<ClosedPoint> out;
  for (const auto& [p, c] : v.entries()) out.insert(p);
  return out;
}

// An element of Rat(X)^x (x) R written as prod q^e over monic irreducible q
// (t included); the leading unit is ignored.
class FactoredFunction {
 public:
  FactoredFunction() = default;
  FactoredFunction(std::initializer_list<std::pair<Polynomial, Rational>> factors) {
    for (const auto& [q, e] : factors) multiply(q, e);
  }

  FactoredFunction& multiply(const Polynomial& q, const Rational& exponent) {
    Polynomial m = q.monic();
    if (m != Polynomial::t() && !is_irreducible(m)) {
      throw Error(ErrorCode::kInvalidPolynomial, "'" + m.to_string() + "' is reducible over Q");
    }
    Rational v = exponent;
    if (auto it = exps_.find(m); it != exps_.end()) v += it->second;
    if (v.is_zero()) {
      exps_.erase(m);
    } else {
      exps_[m] = v;
    }
    return *this;
  }

  const std::map<Polynomial, Rational>& exponents() const { return exps_; }

  friend FactoredFunction operator*(FactoredFunction a, const FactoredFunction& b) {
    for (const auto& [q, e] : b.exps_) a.multiply(q, e);
    return a;
  }

 private:
  std::map<Polynomial, Rational> exps_;
};

// div(phi) on P^1: zeros and poles at finite points, with the balancing
// coefficient at Infinity.
inline RDivisor principal_divisor(const FactoredFunction& phi) {
  RDivisor out;
  Rational weighted(0);
  for (const auto& [q, e] : phi.exponents()) {
    ClosedPoint p = q == Polynomial::t() ? ClosedPoint::zero() : ClosedPoint::finite(q);
    out.add(p, e);
    weighted += e * Rational(q.degree());
  }
  out.add(ClosedPoint::infinity(), -weighted);
  return out;
}

}  // namespace adelic
