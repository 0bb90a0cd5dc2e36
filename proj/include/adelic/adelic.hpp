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

// Toric adelic R-divisors on the projective line over Q and pairs with base
// conditions.
//
// A divisor is D = c0 [0] + cinf [inf] together with one potential per place.
// At a place v the potential is G_v(u) = g_v / 2 in the coordinate
// u = -log|t|_v. Absent places carry the canonical potential
// max(c0 u, -cinf u); its roof vanishes identically on [-cinf, c0].
//
// Units. The archimedean potential is stored as is. A p-adic potential is
// stored as H with G_p(u) = log(p) * H(u / log p), i.e. in the coordinate
// w = ord_p(t) and with values measured in multiples of log p. Its roof is
// then log(p) times the Legendre roof of H, so every roof value is an element
// of Q + sum_p Q log p and is handled exactly as a LogLinear.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adelic/concave.hpp"
#include "adelic/error.hpp"
#include "adelic/log_linear.hpp"
#include "adelic/rational.hpp"
#include "adelic/valuations.hpp"

namespace adelic {

class Place {
 public:
  static Place archimedean() { return Place(0); }
  static Place finite(std::uint64_t p) {
    if (!is_prime(p)) throw Error(ErrorCode::kInvalidPlace, std::to_string(p) + " is not a prime");
    return Place(p);
  }
  // "inf" or a prime.
  static Place parse(const std::string& s) {
    if (s == "inf" || s == "infinity" || s == "archimedean") return archimedean();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18) {
      throw Error(ErrorCode::kInvalidPlace, "bad place '" + s + "'");
    }
    return finite(std::stoull(s));
  }

  bool is_archimedean() const { return p_ == 0; }
  std::uint64_t prime() const { return p_; }
  // 1 at the archimedean place, log p at p.
  LogLinear log_unit() const { return is_archimedean() ? LogLinear(Rational(1)) : LogLinear::log_unit(p_); }
  std::string to_string() const { return is_archimedean() ? "inf" : std::to_string(p_); }

  friend bool operator==(const Place&, const Place&) = default;
  friend auto operator<=>(const Place&, const Place&) = default;

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  }

 private:
  explicit Place(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

class ToricAdelicDivisor {
 public:
  ToricAdelicDivisor() : c0_(0), cinf_(0) {}
  ToricAdelicDivisor(Rational c0, Rational cinf) : c0_(std::move(c0)), cinf_(std::move(cinf)) {}

  // Copy with the potential at `place` replaced.
  ToricAdelicDivisor with_potential(const Place& place, const LinePA& potential) const {
    if (potential.left_slope() != -cinf_ || potential.right_slope() != c0_) {
      throw Error(ErrorCode::kInvalidPotential,
                  "potential at " + place.to_string() + " has slopes (" + potential.left_slope().to_string() + ", " +
                      potential.right_slope().to_string() + "), expected (" + (-cinf_).to_string() + ", " +
                      c0_.to_string() + ")");
    }
    ToricAdelicDivisor out = *this;
    if (potential == canonical_potential()) {
      out.potentials_.erase(place);
    } else {
      out.potentials_.insert_or_assign(place, potential);
    }
    return out;
  }

  const Rational& c0() const { return c0_; }
  const Rational& cinf() const { return cinf_; }
  Rational degree() const { return c0_ + cinf_; }
  RDivisor divisor() const {
    RDivisor d;
    d.add(ClosedPoint::zero(), c0_);
    d.add(ClosedPoint::infinity(), cinf_);
    return d;
  }

  // Places with a non-canonical potential.
  const std::map<Place, LinePA>& potentials() const { return potentials_; }
  bool has_finite_places() const {
    for (const auto& [v, g] : potentials_) {
      if (!v.is_archimedean()) return true;
    }
    return false;
  }

  LinePA canonical_potential() const { return LinePA::kink_at_origin(-cinf_, c0_); }
  LinePA potential(const Place& place) const {
    auto it = potentials_.find(place);
    return it == potentials_.end() ? canonical_potential() : it->second;
  }

  ToricAdelicDivisor scaled(const Rational& a) const {
    ToricAdelicDivisor out(a * c0_, a * cinf_);
    for (const auto& [v, g] : potentials_) out = out.with_potential(v, g.scaled(a));
    return out;
  }

  friend ToricAdelicDivisor operator+(const ToricAdelicDivisor& a, const ToricAdelicDivisor& b) {
    ToricAdelicDivisor out(a.c0_ + b.c0_, a.cinf_ + b.cinf_);
    std::map<Place, bool> places;
    for (const auto& [v, g] : a.potentials_) places[v] = true;
    for (const auto& [v, g] : b.potentials_) places[v] = true;
    for (const auto& [v, unused] : places) out = out.with_potential(v, a.potential(v) + b.potential(v));
    return out;
  }
  friend ToricAdelicDivisor operator-(const ToricAdelicDivisor& a, const ToricAdelicDivisor& b) {
    return a + b.scaled(Rational(-1));
  }
  friend bool operator==(const ToricAdelicDivisor& a, const ToricAdelicDivisor& b) {
    return a.c0_ == b.c0_ && a.cinf_ == b.cinf_ && a.potentials_ == b.potentials_;
  }

  std::string to_string() const {
    std::string out = "D(c0=" + c0_.to_string() + ", cinf=" + cinf_.to_string();
    for (const auto& [v, g] : potentials_) out += ", " + v.to_string() + ": " + g.to_string();
    return out + ")";
  }

 private:
  Rational c0_;
  Rational cinf_;
  std::map<Place, LinePA> potentials_;
};

inline ToricAdelicDivisor scale(const ToricAdelicDivisor& d, const Rational& a) { return d.scaled(a); }

struct Pair {
  ToricAdelicDivisor divisor;
  BaseCondition base;

  Pair() = default;
  Pair(ToricAdelicDivisor d) : divisor(std::move(d)) {}  // NOLINT(google-explicit-constructor)
  Pair(ToricAdelicDivisor d, BaseCondition v) : divisor(std::move(d)), base(std::move(v)) {}

  Pair scaled(const Rational& a) const { return Pair(divisor.scaled(a), base.scaled(a)); }
  friend Pair operator+(const Pair& a, const Pair& b) { return Pair(a.divisor + b.divisor, a.base + b.base); }
  friend Pair operator-(const Pair& a, const Pair& b) { return a + b.scaled(Rational(-1)); }
  friend bool operator==(const Pair&, const Pair&) = default;

  std::string to_string() const { return "(" + divisor.to_string() + "; " + base.to_string() + ")"; }
};

inline Pair scale(const Pair& p, const Rational& a) { return p.scaled(a); }

// ---------------------------------------------------------------------------
// Polytopes and roofs.

inline Interval polytope(const ToricAdelicDivisor& d) { return Interval::from_bounds(-d.cinf(), d.c0()); }

inline void require_toric(const BaseCondition& v) {
  if (v.has_positive_nontoric()) {
    throw Error(ErrorCode::kNonToricBaseCondition, "base condition " + v.to_string() + " has a positive non-toric entry");
  }
}

// Exponent range of sections meeting the base condition. A positive order
// along Zero raises the lower end, a positive order along Infinity lowers the
// upper end; negative orders impose nothing.
inline Interval shifted_polytope(const Pair& p) {
  require_toric(p.base);
  Rational at_zero = max(p.base.at(ClosedPoint::zero()), Rational(0));
  Rational at_inf = max(p.base.at(ClosedPoint::infinity()), Rational(0));
  return Interval::from_bounds(-p.divisor.cinf() + at_zero, p.divisor.c0() - at_inf);
}

// Roof of the potential at one place, in that place's units, on the polytope.
inline ConcavePA<Rational> place_roof(const ToricAdelicDivisor& d, const Place& v) {
  if (polytope(d).is_empty()) throw Error(ErrorCode::kEmptyPolytope, "divisor of negative degree");
  return legendre_roof(convex_envelope(d.potential(v)));
}

// theta = sum over places of the roofs, on the shifted polytope.
inline ConcavePA<LogLinear> global_roof(const Pair& p) {
  Interval delta = shifted_polytope(p);
  if (delta.is_empty()) throw Error(ErrorCode::kEmptyPolytope, "shifted polytope of " + p.to_string() + " is empty");
  ConcavePA<LogLinear> theta = ConcavePA<LogLinear>::constant(delta, LogLinear(Rational(0)));
  for (const auto& [v, g] : p.divisor.potentials()) {
    theta = theta + place_roof(p.divisor, v).restrict(delta).promoted(v.log_unit());
  }
  return theta;
}

// The global roof with rational values when only the archimedean place is
// stored.
inline std::optional<ConcavePA<Rational>> rational_global_roof(const Pair& p) {
  if (p.divisor.has_finite_places()) return std::nullopt;
  Interval delta = shifted_polytope(p);
  if (delta.is_empty()) throw Error(ErrorCode::kEmptyPolytope, "shifted polytope of " + p.to_string() + " is empty");
  return place_roof(p.divisor, Place::archimedean()).restrict(delta);
}

// ---------------------------------------------------------------------------
// Effectivity.

inline bool potentials_nonnegative(const ToricAdelicDivisor& d) {
  for (const auto& [v, g] : d.potentials()) {
    auto inf = g.infimum();
    if (!inf || inf->sign() < 0) return false;
  }
  return true;
}

inline bool is_effective(const Pair& p) {
  const auto& d = p.divisor;
  if (d.c0().sign() < 0 || d.cinf().sign() < 0) return false;
  if (!potentials_nonnegative(d)) return false;
  RDivisor div = d.divisor();
  for (const auto& [pt, order] : p.base.entries()) {
    if (ord(div, pt) < order) return false;
  }
  return true;
}

// Strict effectivity asks in addition for a positive infimum of the
// archimedean potential on the invariant skeleton.
inline bool is_strictly_effective(const Pair& p) {
  if (!is_effective(p)) return false;
  auto inf = p.divisor.potential(Place::archimedean()).infimum();
  return inf && inf->sign() > 0;
}

inline bool is_nu_effective(const Pair& p, const ClosedPoint& pt) {
  return is_effective(p) && ord(p.divisor.divisor(), pt) == p.base.at(pt);
}

// ---------------------------------------------------------------------------
// Minimum and perturbation.

inline ToricAdelicDivisor min_adelic(const std::vector<ToricAdelicDivisor>& ds) {
  if (ds.empty()) throw Error(ErrorCode::kInvalidArgument, "min_adelic of an empty list");
  for (const auto& d : ds) {
    if (!is_effective(Pair(d))) throw Error(ErrorCode::kNotEffectiveInput, d.to_string() + " is not effective");
  }
  Rational c0 = ds.front().c0();
  Rational cinf = ds.front().cinf();
  std::map<Place, bool> places;
  for (const auto& d : ds) {
    c0 = min(c0, d.c0());
    cinf = min(cinf, d.cinf());
    for (const auto& [v, g] : d.potentials()) places[v] = true;
  }
  ToricAdelicDivisor out(c0, cinf);
  for (const auto& [v, unused] : places) {
    std::vector<LinePA> gs;
    for (const auto& d : ds) gs.push_back(d.potential(v));
    out = out.with_potential(v, pointwise_min(gs));
  }
  return out;
}

// Adds phi / 2 to the potential at v. phi is bounded and, at a finite place,
// given in the units of that place (w = ord_p(t), values in log p).
inline Pair perturb(const Pair& p, const Place& v, const LinePA& phi) {
  if (!phi.is_bounded()) {
    throw Error(ErrorCode::kUnboundedPerturbation, "perturbation has nonzero asymptotic slopes");
  }
  Pair out = p;
  out.divisor = p.divisor.with_potential(v, p.divisor.potential(v) + phi.scaled(Rational(1, 2)));
  return out;
}

}  // namespace adelic
