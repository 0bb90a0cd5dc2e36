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

// Section counting and Okounkov data.
//
// Sections of m(D; V) are spanned by monomials s_k, one for every integer k
// with k/m in the shifted polytope. For invariant metrics the small-section
// conditions split per monomial: at p the coefficient must satisfy
// |c_k|_p <= exp(m psi_p(k/m)), at infinity |c_k| <= exp(m psi_inf(k/m)).
// The count of admissible coefficients per exponent is therefore
// 2 floor(d_k B_k) + 1 with d_k = prod_p p^floor(m H_p(k/m)) and
// B_k = exp(m psi_inf(k/m)); the box is counted exactly.
//
// The flag valuation is the order at Zero, which sends s_k to w = -k/m; the
// Okounkov body is the reflection x -> -x of the shifted polytope.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "adelic/adelic.hpp"
#include "adelic/concave.hpp"
#include "adelic/positivity.hpp"
#include "adelic/real.hpp"

namespace adelic {

struct SectionBoxEntry {
  BigInt k;
  Rational denominator;  // d_k; below 1 when a finite-place roof is negative
  RealInterval bound;    // B_k = exp(m psi_inf(k/m))
  BigInt count;          // 2 floor(d_k B_k) + 1
};

struct SectionBox {
  long m = 0;
  std::vector<SectionBoxEntry> entries;
  BigInt total;  // product of the per-exponent counts
};

namespace internal {

// floor(d * exp(q)) for rational d > 0 and q, widening precision until the
// bracket decides it.
inline std::pair<BigInt, RealInterval> floor_scaled_exp(const Rational& d, const Rational& q) {
  if (q.is_zero()) return {floor(d), RealInterval::from_integer(BigInt(1))};
  // Bits in front of the binary point: about |q| log2(e) plus the size of d.
  BigInt lead = floor(abs(q)) * 3 / 2 + 1;
  long magnitude = lead.get_si() + static_cast<long>(mpz_sizeinbase(ceil(d).get_mpz_t(), 2));
  long bits = std::max(default_precision_bits(), 64 + magnitude);
  for (; bits <= (1L << 20); bits *= 2) {
    RealInterval b = RealInterval::from_rational(q, bits).exp();
    RealInterval scaled = RealInterval::from_rational(d, bits) * b;
    auto [ok, f] = scaled.floor_if_determined();
    if (ok) return {f, b};
  }
  throw Error(ErrorCode::kInvalidArgument, "could not separate floor of d*exp(q)");
}

}  // namespace internal

inline SectionBox section_box(const Pair& p, long m) {
  if (m <= 0) throw Error(ErrorCode::kInvalidArgument, "m must be positive");
  Interval delta = shifted_polytope(p);
  if (delta.is_empty()) throw Error(ErrorCode::kEmptyPolytope, "shifted polytope of " + p.to_string() + " is empty");
  ConcavePA<Rational> arch = place_roof(p.divisor, Place::archimedean());
  std::vector<std::pair<std::uint64_t, ConcavePA<Rational>>> finite;
  for (const auto& [v, g] : p.divisor.potentials()) {
    if (!v.is_archimedean()) finite.emplace_back(v.prime(), place_roof(p.divisor, v));
  }
  SectionBox box;
  box.m = m;
  box.total = 1;
  Rational mm(m);
  BigInt k_lo = ceil(delta.lo() * mm);
  BigInt k_hi = floor(delta.hi() * mm);
  for (BigInt k = k_lo; k <= k_hi; ++k) {
    Rational x = Rational(k) / mm;
    Rational d(1);
    for (const auto& [prime, roof] : finite) {
      BigInt f = floor(mm * roof.eval(x));
      d *= pow(Rational(static_cast<long>(prime)), f.get_si());
    }
    auto [fl, bound] = internal::floor_scaled_exp(d, mm * arch.eval(x));
    BigInt count = 2 * fl + 1;
    box.total *= count;
    box.entries.push_back({k, d, bound, count});
  }
  return box;
}

// Log of the number of sections in the coefficient box.
inline RealInterval box_log_count(const Pair& p, long m) {
  return RealInterval::log_of(section_box(p, m).total);
}

// 2 log(count) / m^2.
inline RealInterval volume_estimate(const Pair& p, long m) {
  return box_log_count(p, m) * RealInterval::from_rational(Rational(2, 1) / Rational(m * m));
}

// Largest t for which the exponent of valuation w survives in the filtration
// by m(D - (0, 2t[inf])): psi_inf(-w) + (1/m) log d_k, exactly. Empty when
// w is outside the Okounkov body.
inline std::optional<LogLinear> empirical_transform(const Pair& p, long m, const Rational& w) {
  if (m <= 0) throw Error(ErrorCode::kInvalidArgument, "m must be positive");
  Rational mm(m);
  if (!(w * mm).is_integer()) throw Error(ErrorCode::kInvalidArgument, "w must lie in (1/m)Z");
  Interval delta = shifted_polytope(p);
  Rational x = -w;
  if (!delta.contains(x)) return std::nullopt;
  LogLinear t = LogLinear(place_roof(p.divisor, Place::archimedean()).eval(x));
  for (const auto& [v, g] : p.divisor.potentials()) {
    if (v.is_archimedean()) continue;
    Rational f(floor(mm * place_roof(p.divisor, v).eval(x)));
    t += LogLinear::log_unit(v.prime(), f / mm);
  }
  return t;
}

struct OkounkovSample {
  long m = 0;
  std::vector<std::pair<Rational, LogLinear>> points;  // (w, t_max)
};

inline OkounkovSample okounkov_sample(const Pair& p, long m) {
  Interval delta = shifted_polytope(p);
  if (delta.is_empty()) throw Error(ErrorCode::kEmptyPolytope, "shifted polytope of " + p.to_string() + " is empty");
  OkounkovSample s;
  s.m = m;
  Rational mm(m);
  for (BigInt j = ceil(-delta.hi() * mm); j <= floor(-delta.lo() * mm); ++j) {
    Rational w = Rational(j) / mm;
    s.points.emplace_back(w, *empirical_transform(p, m, w));
  }
  return s;
}

struct OkounkovData {
  Interval body;                    // Delta_nu
  ConcavePA<LogLinear> transform;   // G_nu
  ExactReal volume;                 // volume of the arithmetic Okounkov body
};

inline OkounkovData analytic_okounkov(const Pair& p) {
  if (!is_big(p)) throw Error(ErrorCode::kNotBig, p.to_string() + " is not big");
  ConcavePA<LogLinear> g = global_roof(p).reflected();
  ExactReal volume = integrate_positive_part(g);
  return OkounkovData{g.domain(), std::move(g), std::move(volume)};
}

}  // namespace adelic
