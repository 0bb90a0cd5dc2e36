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

// Positivity of toric adelic divisors and pairs: nef/ample predicates,
// arithmetic volumes, Zariski positive parts, intersection numbers by
// polarization, positive intersection numbers and pseudo-effective
// thresholds.

#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "adelic/adelic.hpp"
#include "adelic/concave.hpp"
#include "adelic/error.hpp"
#include "adelic/log_linear.hpp"

namespace adelic {

// ---------------------------------------------------------------------------
// Volumes.

// avol = 2 * integral of max(theta, 0) over the shifted polytope; 0 when the
// shifted polytope is empty.
inline ExactReal avol(const Pair& p) {
  if (shifted_polytope(p).is_empty()) return ExactReal(0);
  return integrate_positive_part(global_roof(p)) * Rational(2);
}

inline bool is_big(const Pair& p) {
  Interval delta = shifted_polytope(p);
  if (delta.is_empty() || delta.is_point()) return false;
  return sign(global_roof(p).max_value()) > 0;
}

inline bool is_pseff(const Pair& p) {
  if (shifted_polytope(p).is_empty()) return false;
  return sign(global_roof(p).max_value()) >= 0;
}

// ---------------------------------------------------------------------------
// Nef cone.

inline bool is_relatively_nef(const ToricAdelicDivisor& d) {
  if (d.degree().sign() < 0) return false;
  for (const auto& [v, g] : d.potentials()) {
    if (!g.is_convex()) return false;
  }
  return true;
}

struct NefCertificate {
  ToricAdelicDivisor divisor;
  LogLinear min_roof_value;
};

// Minimum of the global roof over the polytope.
inline LogLinear min_roof(const ToricAdelicDivisor& d) { return global_roof(Pair(d)).min_value(); }

inline std::optional<NefCertificate> certify_nef(const ToricAdelicDivisor& d) {
  if (!is_relatively_nef(d)) return std::nullopt;
  LogLinear m = min_roof(d);
  if (sign(m) < 0) return std::nullopt;
  return NefCertificate{d, m};
}

inline bool is_nef(const ToricAdelicDivisor& d) { return certify_nef(d).has_value(); }

inline bool is_ample(const ToricAdelicDivisor& d) {
  if (!is_relatively_nef(d) || d.degree().sign() <= 0) return false;
  return sign(min_roof(d)) > 0;
}

// On a curve, w-ample and relatively nef is the same as ample. Inputs that
// are not relatively nef are outside what this model can decide.
inline bool is_w_ample(const ToricAdelicDivisor& d) {
  if (!is_relatively_nef(d)) {
    throw Error(ErrorCode::kNotRelativelyNef, d.to_string() + " is not relatively nef");
  }
  return is_ample(d);
}

// ---------------------------------------------------------------------------
// Zariski positive part.

struct ZariskiPart {
  ToricAdelicDivisor positive;
  Pair pair;
};

// N below P in the toric order: the polytope of N sits inside the shifted
// polytope of P and every potential of P dominates the one of N.
inline bool precedes(const ToricAdelicDivisor& n, const Pair& p) {
  Interval outer = shifted_polytope(p);
  if (!outer.contains(polytope(n))) return false;
  std::set<Place> places;
  for (const auto& [v, g] : n.potentials()) places.insert(v);
  for (const auto& [v, g] : p.divisor.potentials()) places.insert(v);
  places.insert(Place::archimedean());
  for (const auto& v : places) {
    auto inf = (p.divisor.potential(v) - n.potential(v)).infimum();
    if (!inf || inf->sign() < 0) return false;
  }
  return true;
}

inline ZariskiPart zariski_positive_part(const Pair& p) {
  if (!is_big(p)) throw Error(ErrorCode::kNotBig, p.to_string() + " is not big");
  Interval plus = nonnegative_region(global_roof(p));
  ToricAdelicDivisor positive(plus.hi(), -plus.lo());
  for (const auto& [v, g] : p.divisor.potentials()) {
    positive = positive.with_potential(v, legendre_potential(place_roof(p.divisor, v).restrict(plus)).function());
  }
  return ZariskiPart{positive, p};
}

// ---------------------------------------------------------------------------
// Intersection numbers.

// A = plus - minus with both parts nef. `extra` enlarges the auxiliary
// divisor; different values give different decompositions of the same A.
inline std::pair<ToricAdelicDivisor, ToricAdelicDivisor> nef_decomposition(const ToricAdelicDivisor& a,
                                                                         unsigned extra = 0) {
  std::set<Place> places{Place::archimedean()};
  for (const auto& [v, g] : a.potentials()) places.insert(v);
  // Concave kinks to be cancelled at each place.
  std::map<Place, std::vector<std::pair<Rational, Rational>>> kinks;
  Rational max_total(0);
  for (const auto& v : places) {
    LinePA g = a.potential(v);
    std::vector<Rational> s = g.slopes();
    Rational total(0);
    for (std::size_t i = 0; i < g.points().size(); ++i) {
      Rational jump = s[i + 1] - s[i];
      if (jump.sign() < 0) {
        Rational delta = -jump / Rational(2);
        kinks[v].emplace_back(g.points()[i].x, delta);
        total += delta;
      }
    }
    max_total = max(max_total, total);
  }
  Rational n = Rational(1 + static_cast<long>(extra)) + max_total + abs(a.c0()) + abs(a.cinf());
  ToricAdelicDivisor b(n, n);
  for (const auto& v : places) {
    LinePA bv = LinePA::constant(Rational(0));
    Rational total(0);
    for (const auto& [x, delta] : kinks[v]) {
      bv = bv + LinePA({{x, Rational(0)}}, -delta, delta);
      total += delta;
    }
    bv = bv + LinePA::kink_at_origin(-(n - total), n - total);
    b = b.with_potential(v, bv);
  }
  LogLinear lowest = min_roof(b);
  LogLinear lowest_sum = min_roof(a + b);
  Rational shift = max(Rational(0), max(rational_upper_bound(-lowest), rational_upper_bound(-lowest_sum)));
  b = b.with_potential(Place::archimedean(), b.potential(Place::archimedean()) + LinePA::constant(shift));
  return {a + b, b};
}

// adeg(A . B) for nef A, B by polarization.
inline ExactReal adeg_nef(const ToricAdelicDivisor& a, const ToricAdelicDivisor& b) {
  return (avol(Pair(a + b)) - avol(Pair(a)) - avol(Pair(b))) * Rational(1, 2);
}

inline ExactReal adeg_product(const ToricAdelicDivisor& a, const ToricAdelicDivisor& b, unsigned extra_a = 0,
                              unsigned extra_b = 0) {
  if (extra_a == 0 && extra_b == 0 && is_nef(a) && is_nef(b)) return adeg_nef(a, b);
  auto [a1, a2] = nef_decomposition(a, extra_a);
  auto [b1, b2] = nef_decomposition(b, extra_b);
  return adeg_nef(a1, b1) - adeg_nef(a1, b2) - adeg_nef(a2, b1) + adeg_nef(a2, b2);
}

// <(D; V)> . D' = adeg(P(D; V) . D').
inline ExactReal positive_intersection(const Pair& p, const ToricAdelicDivisor& dprime) {
  return adeg_product(zariski_positive_part(p).positive, dprime);
}

// ---------------------------------------------------------------------------
// Thresholds.

struct RationalBracket {
  Rational lo;
  Rational hi;

  bool is_exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  std::string to_string() const {
    return is_exact() ? lo.to_string() : "[" + lo.to_string() + ", " + hi.to_string() + "]";
  }
};

constexpr unsigned kDefaultBisectionBits = 40;

namespace internal {

// max t such that some x has  a_i t + b_i x <= c_i  for all i; vertex
// enumeration over pairs of constraints.
struct HalfPlane {
  Rational a;
  Rational b;
  Rational c;
};

inline std::optional<Rational> max_t_2d(const std::vector<HalfPlane>& hs) {
  std::optional<Rational> best;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      Rational det = hs[i].a * hs[j].b - hs[j].a * hs[i].b;
      if (det.is_zero()) continue;
      Rational t = (hs[i].c * hs[j].b - hs[j].c * hs[i].b) / det;
      Rational x = (hs[i].a * hs[j].c - hs[j].a * hs[i].c) / det;
      bool feasible = true;
      for (const auto& h : hs) {
        if (h.c < h.a * t + h.b * x) {
          feasible = false;
          break;
        }
      }
      if (feasible && (!best || *best < t)) best = t;
    }
  }
  return best;
}

// Exact threshold when only archimedean data is present.
inline std::optional<Rational> exact_pseff_threshold(const Pair& p1, const ToricAdelicDivisor& n) {
  if (p1.divisor.has_finite_places() || n.has_finite_places()) return std::nullopt;
  LinePA g1 = p1.divisor.potential(Place::archimedean());
  LinePA gn = n.potential(Place::archimedean());
  std::set<Rational> us{Rational(0)};
  for (const auto& q : g1.points()) us.insert(q.x);
  for (const auto& q : gn.points()) us.insert(q.x);
  std::vector<HalfPlane> hs;
  for (const auto& u : us) hs.push_back({gn.eval(u), u, g1.eval(u)});
  require_toric(p1.base);
  Rational v0 = max(p1.base.at(ClosedPoint::zero()), Rational(0));
  Rational vinf = max(p1.base.at(ClosedPoint::infinity()), Rational(0));
  hs.push_back({n.cinf(), Rational(-1), p1.divisor.cinf() - v0});
  hs.push_back({n.c0(), Rational(1), p1.divisor.c0() - vinf});
  return max_t_2d(hs);
}

}  // namespace internal

// sup { t : (P1 - t N) pseudo-effective } for nef and big N.
inline RationalBracket pseff_threshold(const Pair& p1, const ToricAdelicDivisor& n,
                                       unsigned bits = kDefaultBisectionBits) {
  if (!is_big(p1)) throw Error(ErrorCode::kNotBig, p1.to_string() + " is not big");
  if (!is_nef(n) || !is_big(Pair(n))) throw Error(ErrorCode::kNotNef, n.to_string() + " is not nef and big");
  if (auto t = internal::exact_pseff_threshold(p1, n)) return {*t, *t};
  auto pseff_at = [&](const Rational& t) { return is_pseff(p1 + Pair(n.scaled(-t))); };
  Rational lo(0);
  Rational hi = shifted_polytope(p1).length() / n.degree();
  if (pseff_at(hi)) return {hi, hi};
  Rational tol = dyadic(bits);
  while (tol < hi - lo) {
    Rational mid = (lo + hi) / Rational(2);
    if (pseff_at(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

inline RationalBracket inradius(const Pair& p1, const Pair& p2, unsigned bits = kDefaultBisectionBits) {
  if (!is_big(p1)) throw Error(ErrorCode::kNotBig, p1.to_string() + " is not big");
  return pseff_threshold(p1, zariski_positive_part(p2).positive, bits);
}

inline RationalBracket circumradius(const Pair& p1, const Pair& p2, unsigned bits = kDefaultBisectionBits) {
  RationalBracket r = inradius(p2, p1, bits);
  if (r.lo.sign() <= 0) throw Error(ErrorCode::kNotBig, "inradius bracket touches zero");
  return {Rational(1) / r.hi, Rational(1) / r.lo};
}

}  // namespace adelic
