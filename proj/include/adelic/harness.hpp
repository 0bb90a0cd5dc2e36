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

// Checks of the volume derivative and of the Diskant-Bonnesen chain, plus the
// randomized property suites.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "adelic/adelic.hpp"
#include "adelic/positivity.hpp"
#include "adelic/sections.hpp"
#include "adelic/serialize.hpp"

namespace adelic {

constexpr long kHarnessBits = 256;

// A real number that is exact when rational and bracketed otherwise.
class Quantity {
 public:
  Quantity(const Rational& q) : exact_(q), iv_(RealInterval::from_rational(q, kHarnessBits)) {}  // NOLINT
  Quantity(int v) : Quantity(Rational(v)) {}                                                        // NOLINT
  Quantity(const ExactReal& v) : exact_(v.rational()), iv_(v.bracket(kHarnessBits)) {}              // NOLINT
  explicit Quantity(RealInterval iv) : iv_(std::move(iv)) {}

  static Quantity from_bracket(const RationalBracket& b) {
    if (b.is_exact()) return Quantity(b.lo);
    return Quantity(RealInterval::hull(b.lo, b.hi, kHarnessBits));
  }

  const std::optional<Rational>& exact() const { return exact_; }
  const RealInterval& interval() const { return iv_; }
  double value() const { return exact_ ? exact_->to_double() : iv_.midpoint(); }

  friend Quantity operator+(const Quantity& a, const Quantity& b) {
    if (a.exact_ && b.exact_) return Quantity(*a.exact_ + *b.exact_);
    return Quantity(a.iv_ + b.iv_);
  }
  friend Quantity operator-(const Quantity& a, const Quantity& b) {
    if (a.exact_ && b.exact_) return Quantity(*a.exact_ - *b.exact_);
    return Quantity(a.iv_ - b.iv_);
  }
  friend Quantity operator*(const Quantity& a, const Quantity& b) {
    if (a.exact_ && b.exact_) return Quantity(*a.exact_ * *b.exact_);
    return Quantity(a.iv_ * b.iv_);
  }
  friend Quantity operator/(const Quantity& a, const Quantity& b) {
    if (a.exact_ && b.exact_) return Quantity(*a.exact_ / *b.exact_);
    return Quantity(a.iv_ / b.iv_);
  }

  Quantity sqrt() const {
    if (exact_ && exact_->sign() >= 0) {
      const BigInt& n = exact_->numerator();
      const BigInt& d = exact_->denominator();
      if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t())) {
        BigInt rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        return Quantity(Rational(rn, rd));
      }
    }
    return Quantity(iv_.sqrt());
  }

  Quantity abs() const {
    if (exact_) return Quantity(adelic::abs(*exact_));
    return value() < 0 ? Quantity(-iv_) : *this;
  }

  std::string to_string() const { return exact_ ? exact_->to_string() : iv_.to_string(17); }

 private:
  std::optional<Rational> exact_;
  RealInterval iv_{kHarnessBits};
};

struct InequalityCase {
  std::string name;
  Quantity lhs;
  Quantity rhs;
  Quantity slack;  // rhs - lhs
  bool pass = false;
};

inline InequalityCase make_case(std::string name, const Quantity& lhs, const Quantity& rhs, double tolerance) {
  Quantity slack = rhs - lhs;
  bool pass = slack.exact() ? slack.exact()->sign() >= 0 : slack.value() >= -tolerance;
  return InequalityCase{std::move(name), lhs, rhs, slack, pass};
}

// ---------------------------------------------------------------------------
// Differentiability.

struct DifferenceRow {
  Rational h;
  Quantity forward;
  Quantity backward;
  Quantity central;
  Quantity richardson;  // (4 central(h/2) - central(h)) / 3
};

struct OneSided {
  ExactReal value;
  bool exact = false;  // three consecutive quadratic fits agreed exactly
};

struct DerivativeReport {
  Pair pair;
  ToricAdelicDivisor direction;
  std::vector<DifferenceRow> table;
  OneSided right;
  OneSided left;
  ExactReal analytic;
  double max_deviation = 0;
  bool exact_agreement = false;
  bool kink = false;  // one-sided derivatives differ
  double quadratic_coefficient = 0;
  std::optional<double> siu_bound;  // 4 avol(A) for a supplied dominating nef A
  bool pass = false;
};

inline std::vector<Rational> default_steps() {
  std::vector<Rational> hs;
  for (long k = 4; k <= 12; ++k) hs.push_back(dyadic(k));
  return hs;
}

namespace internal {

// One-sided derivative of r -> f(s r) at 0 from the quadratic fit
// (4 f(h) - f(2h) - 3 f(0)) / 2h, h = 2^-k.
inline OneSided one_sided_derivative(const std::function<ExactReal(const Rational&)>& f, const ExactReal& f0,
                                     int side) {
  std::vector<ExactReal> fits;
  for (long k = 3; k <= 48; ++k) {
    Rational h = dyadic(k) * Rational(side);
    ExactReal a = (f(h) * Rational(4) - f(h * Rational(2)) - f0 * Rational(3)) * (Rational(1) / (Rational(2) * h));
    fits.push_back(a);
    std::size_t n = fits.size();
    if (n >= 3 && fits[n - 1] == fits[n - 2] && fits[n - 2] == fits[n - 3]) return {a, true};
    if (n >= 2 && k >= 24) {
      RealInterval d = (fits[n - 1] - fits[n - 2]).bracket(kHarnessBits);
      if (std::abs(d.midpoint()) + d.width() < 1e-15) return {a, false};
    }
  }
  return {fits.back(), false};
}

}  // namespace internal

// avol(P + r D') near r = 0 against 2 <P> . D'.
inline DerivativeReport check_differentiability(const Pair& p, const ToricAdelicDivisor& dprime,
                                                std::vector<Rational> hs = default_steps(),
                                                const std::optional<ToricAdelicDivisor>& dominating = std::nullopt) {
  if (!is_big(p)) throw Error(ErrorCode::kNotBig, p.to_string() + " is not big");
  std::sort(hs.begin(), hs.end(), [](const Rational& a, const Rational& b) { return b < a; });
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  auto f = [&](const Rational& r) { return avol(p + Pair(dprime.scaled(r))); };
  DerivativeReport rep{p, dprime};
  ExactReal f0 = f(Rational(0));
  rep.analytic = positive_intersection(p, dprime) * Rational(2);
  Quantity analytic(rep.analytic);
  for (const auto& h : hs) {
    if (h.sign() <= 0) throw Error(ErrorCode::kInvalidArgument, "steps must be positive");
    ExactReal fp = f(h);
    ExactReal fm = f(-h);
    Rational half = h / Rational(2);
    ExactReal central = (fp - fm) * (Rational(1) / (Rational(2) * h));
    ExactReal central_half = (f(half) - f(-half)) * (Rational(1) / h);
    rep.table.push_back({h, (fp - f0) * (Rational(1) / h), (f0 - fm) * (Rational(1) / h), central,
                         (central_half * Rational(4) - central) * Rational(1, 3)});
    for (const auto& [fr, r] : {std::pair{fp, h}, std::pair{fm, -h}}) {
      Quantity rest = Quantity(fr) - Quantity(f0) - Quantity(r) * analytic;
      rep.quadratic_coefficient = std::max(rep.quadratic_coefficient, rest.abs().value() / (r * r).to_double());
    }
  }
  rep.right = internal::one_sided_derivative(f, f0, 1);
  rep.left = internal::one_sided_derivative(f, f0, -1);
  double dr = (Quantity(rep.right.value) - analytic).abs().value();
  double dl = (Quantity(rep.left.value) - analytic).abs().value();
  rep.max_deviation = std::max(dr, dl);
  rep.exact_agreement = rep.right.exact && rep.left.exact && rep.right.value == rep.analytic &&
                        rep.left.value == rep.analytic;
  rep.kink = (Quantity(rep.right.value) - Quantity(rep.left.value)).abs().value() > 1e-12;
  bool within = rep.max_deviation <= std::ldexp(1.0, -20) * (1.0 + std::abs(analytic.value()));
  rep.pass = rep.exact_agreement || within;
  if (dominating) {
    rep.siu_bound = 4.0 * avol(Pair(*dominating)).to_double();
    rep.pass = rep.pass && rep.quadratic_coefficient <= *rep.siu_bound + 1e-12;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Diskant and Bonnesen.

struct DiskantReport {
  Pair p1;
  Pair p2;
  Quantity s0;
  Quantity s1;
  Quantity s2;
  RationalBracket r;
  RationalBracket big_r;
  std::vector<InequalityCase> cases;

  bool pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const InequalityCase& c) { return c.pass; });
  }
  const InequalityCase& at(const std::string& name) const {
    for (const auto& c : cases) {
      if (c.name == name) return c;
    }
    throw Error(ErrorCode::kInvalidArgument, "no case named " + name);
  }
  bool has(const std::string& name) const {
    return std::any_of(cases.begin(), cases.end(), [&](const InequalityCase& c) { return c.name == name; });
  }
};

constexpr double kInequalityTolerance = 1e-9;

inline DiskantReport diskant_report(const Pair& p1, const Pair& p2, double tolerance = kInequalityTolerance,
                                    unsigned bits = kDefaultBisectionBits) {
  if (!is_big(p1)) throw Error(ErrorCode::kNotBig, p1.to_string() + " is not big");
  if (!is_big(p2)) throw Error(ErrorCode::kNotBig, p2.to_string() + " is not big");
  ToricAdelicDivisor z1 = zariski_positive_part(p1).positive;
  ToricAdelicDivisor z2 = zariski_positive_part(p2).positive;
  ExactReal a1 = avol(p1);
  ExactReal a2 = avol(p2);
  DiskantReport rep{p1, p2, Quantity(a2), Quantity(adeg_product(z1, z2)), Quantity(a1)};
  rep.r = pseff_threshold(p1, z2, bits);
  RationalBracket inv = pseff_threshold(p2, z1, bits);
  rep.big_r = {Rational(1) / inv.hi, Rational(1) / inv.lo};

  const Quantity& s0 = rep.s0;
  const Quantity& s1 = rep.s1;
  const Quantity& s2 = rep.s2;
  Quantity r = Quantity::from_bracket(rep.r);
  Quantity big_r = Quantity::from_bracket(rep.big_r);
  Quantity disc = s1 * s1 - s0 * s2;
  Quantity root = disc.sqrt();
  Quantity gap = s1 - r * s0;
  auto add = [&](const char* name, const Quantity& lhs, const Quantity& rhs) {
    rep.cases.push_back(make_case(name, lhs, rhs, tolerance));
  };
  add("diskant_nonneg", Quantity(0), gap * gap);
  add("diskant_upper", gap * gap, disc);
  add("chain_lower", (s1 - root) / s0, r);
  add("chain_r_le_s2_over_s1", r, s2 / s1);
  add("chain_s2_over_s1_le_s1_over_s0", s2 / s1, s1 / s0);
  add("chain_s1_over_s0_le_R", s1 / s0, big_r);
  add("chain_upper", big_r, s2 / (s1 - root));
  Quantity w = s0 * (big_r - r) / Quantity(2);
  add("bonnesen", w * w, disc);

  // Equality in Brunn-Minkowski forces proportional positive parts.
  Quantity q1(a1);
  Quantity q2(a2);
  Quantity sum(avol(p1 + p2));
  Quantity bm = sum.sqrt() - q1.sqrt() - q2.sqrt();
  if (bm.abs().value() <= 1e-9) {
    add("equality_s1_squared", disc.abs(), Quantity(Rational(1, 1000000)));
    add("equality_radii", (big_r - r).abs(), Quantity(Rational(1, 1000000)));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Random instances.

struct SamplerOptions {
  int max_kinks = 6;
  long max_height = 16;
  int max_finite_places = 2;
  bool base_conditions = true;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, SamplerOptions opt = {}) : rng_(seed), opt_(opt) {}

  std::mt19937_64& rng() { return rng_; }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  // n / d with |n| in [lo, hi] scaled to the height bound.
  Rational rational(long lo, long hi) {
    long d = integer(1, 4);
    return Rational(integer(lo * d, hi * d), d);
  }

  // Convex function with asymptotic slopes (sl, sr), up to max_kinks
  // breakpoints in [-4, 4].
  LinePA convex(const Rational& sl, const Rational& sr) {
    if (sr < sl) throw Error(ErrorCode::kInvalidArgument, "convex sampler needs sl <= sr");
    int kinks = static_cast<int>(integer(1, opt_.max_kinks));
    std::set<Rational> xs;
    while (static_cast<int>(xs.size()) < kinks) xs.insert(Rational(integer(-32, 32), 8));
    std::vector<Rational> slopes;
    for (int i = 0; i + 1 < kinks; ++i) {
      Rational t(integer(0, opt_.max_height), opt_.max_height);
      slopes.push_back(sl + (sr - sl) * t);
    }
    std::sort(slopes.begin(), slopes.end());
    std::vector<LinePA::Point> pts;
    Rational y = rational(0, 3);
    auto it = xs.begin();
    pts.push_back({*it, y});
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      Rational x0 = *it;
      Rational x1 = *++it;
      y += slopes[i] * (x1 - x0);
      pts.push_back({x1, y});
    }
    return LinePA(std::move(pts), sl, sr);
  }

  std::vector<std::uint64_t> primes() {
    static const std::uint64_t kPrimes[] = {2, 3, 5, 7};
    std::vector<std::uint64_t> out;
    int n = static_cast<int>(integer(0, opt_.max_finite_places));
    std::vector<std::uint64_t> pool(std::begin(kPrimes), std::end(kPrimes));
    std::shuffle(pool.begin(), pool.end(), rng_);
    for (int i = 0; i < n; ++i) out.push_back(pool[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Relatively nef divisor with c0, cinf >= 0 and c0 + cinf > 0.
  ToricAdelicDivisor relatively_nef() {
    Rational c0, cinf;
    do {
      c0 = rational(0, 4);
      cinf = rational(0, 4);
    } while ((c0 + cinf).sign() <= 0);
    ToricAdelicDivisor d(c0, cinf);
    d = d.with_potential(Place::archimedean(), convex(-cinf, c0));
    for (auto p : primes()) d = d.with_potential(Place::finite(p), convex(-cinf, c0));
    return d;
  }

  // Nef divisor: archimedean potential lifted until the roof is nonnegative.
  ToricAdelicDivisor nef(bool strictly_big = true) {
    ToricAdelicDivisor d = relatively_nef();
    LogLinear low = min_roof(d);
    Rational shift = low.sign() < 0 ? rational_upper_bound(-low) : Rational(0);
    if (strictly_big) shift += rational(0, 2) + Rational(1, 4);
    const Place inf = Place::archimedean();
    return d.with_potential(inf, d.potential(inf) + LinePA::constant(shift));
  }

  // Toric base condition with |order| <= the matching coefficient.
  BaseCondition base(const ToricAdelicDivisor& d) {
    BaseCondition v;
    if (!opt_.base_conditions) return v;
    if (coin() && d.c0().sign() > 0) v.add(ClosedPoint::zero(), d.c0() * Rational(integer(-8, 8), 8));
    if (integer(0, 3) == 0 && d.cinf().sign() > 0) v.add(ClosedPoint::infinity(), d.cinf() * Rational(integer(-8, 8), 8));
    return v;
  }

  Pair big_pair() {
    for (;;) {
      ToricAdelicDivisor d = relatively_nef();
      if (coin()) {
        const Place inf = Place::archimedean();
        d = d.with_potential(inf, d.potential(inf) + LinePA::constant(rational(-2, 2)));
      }
      Pair p(d, base(d));
      if (is_big(p)) return p;
    }
  }

  // Big pair whose Zariski positive part is computable exactly.
  Pair zariski_pair() {
    for (;;) {
      Pair p = big_pair();
      try {
        zariski_positive_part(p);
        return p;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kIrrationalCrossing) throw;
      }
    }
  }

  // Difference of nef divisors, scaled down.
  ToricAdelicDivisor integrable() { return (nef(false) - nef(false)).scaled(Rational(1, integer(1, 4))); }

  // Integrable divisor with c0 + cinf = 0.
  ToricAdelicDivisor degree_zero() {
    ToricAdelicDivisor a = nef(false);
    Rational deg = a.degree();
    Rational c0 = deg * Rational(integer(0, 8), 8);
    ToricAdelicDivisor b(c0, deg - c0);
    b = b.with_potential(Place::archimedean(), convex(c0 - deg, c0));
    for (auto p : primes()) b = b.with_potential(Place::finite(p), convex(c0 - deg, c0));
    return a - b;
  }

  // Effective divisor: nonnegative coefficients and potentials.
  ToricAdelicDivisor effective() {
    ToricAdelicDivisor d = relatively_nef();
    const auto pots = d.potentials();
    for (const auto& [v, g] : pots) {
      Rational low = *g.infimum();
      if (low.sign() < 0) d = d.with_potential(v, g + LinePA::constant(-low));
    }
    return d;
  }

  // Bounded function with up to max_kinks breakpoints and values in [-2, 2].
  LinePA bounded() {
    int kinks = static_cast<int>(integer(1, opt_.max_kinks));
    std::set<Rational> xs;
    while (static_cast<int>(xs.size()) < kinks) xs.insert(Rational(integer(-32, 32), 8));
    std::vector<LinePA::Point> pts;
    for (const auto& x : xs) pts.push_back({x, rational(-2, 2)});
    return LinePA(std::move(pts), Rational(0), Rational(0));
  }

 private:
  std::mt19937_64 rng_;
  SamplerOptions opt_;
};

// ---------------------------------------------------------------------------
// Suites.

struct InstanceResult {
  bool pass = true;
  double slack = 0;       // smallest margin seen; negative means violated
  std::string instance;   // JSON of the sampled data
  std::string detail;
};

struct SuiteSummary {
  std::string name;
  long count = 0;
  std::uint64_t seed = 0;
  long passed = 0;
  double worst_slack = 0;
  long worst_index = -1;
  std::optional<InstanceResult> first_failure;
  long first_failure_index = -1;

  bool pass() const { return passed == count; }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> kNames = {
      "brunn_minkowski",   "homogeneity",    "zariski",      "siu",           "hodge",
      "kt",                "continuity",     "min_valuation", "legendre_involution", "openness",
      "oracle_convergence", "okounkov_match", "diskant_random", "bonnesen_random", "superadditivity",
      "differentiability"};
  return kNames;
}

namespace internal {

inline std::uint64_t instance_seed(std::uint64_t seed, long index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::uint64_t out[1];
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  out[0] = (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
  return out[0];
}

inline Rational lower_rational(const LogLinear& v) {
  if (v.is_rational()) return v.constant();
  Rational scale(1L << 30);
  return Rational((v * scale).bracket().floor_lower()) / scale;
}

inline Json pairs_json(std::initializer_list<Pair> ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}

inline InstanceResult from_case(const InequalityCase& c, const Json& inst) {
  return {c.pass, c.slack.value(), inst.dump(), c.name + ": " + c.lhs.to_string() + " <= " + c.rhs.to_string()};
}

inline InstanceResult exact_equal(bool eq, const Json& inst, const std::string& detail) {
  return {eq, eq ? 0.0 : -1.0, inst.dump(), detail};
}

inline InstanceResult merge(std::vector<InstanceResult> rs) {
  InstanceResult out = rs.front();
  for (const auto& r : rs) {
    if (r.slack < out.slack || (!r.pass && out.pass)) {
      out.slack = std::min(out.slack, r.slack);
      if (!r.pass) out = r;
    }
  }
  return out;
}

inline InstanceResult brunn_minkowski(Sampler& s) {
  Pair p1 = s.big_pair();
  Pair p2 = s.big_pair();
  Quantity a1(avol(p1));
  Quantity a2(avol(p2));
  Quantity a12(avol(p1 + p2));
  Quantity t = a12 - a1 - a2;
  // sqrt(a12) >= sqrt(a1) + sqrt(a2)  <=>  t >= 0 and t^2 >= 4 a1 a2
  Json inst = pairs_json({p1, p2});
  InstanceResult a = from_case(make_case("t_nonneg", Quantity(0), t, kInequalityTolerance), inst);
  InstanceResult b = from_case(make_case("squared", Quantity(4) * a1 * a2, t * t, kInequalityTolerance), inst);
  return merge({a, b});
}

inline InstanceResult homogeneity(Sampler& s) {
  Pair p = s.big_pair();
  Rational a(s.integer(1, 16), s.integer(1, 16));
  bool eq = avol(p.scaled(a)) == avol(p) * (a * a);
  Json inst = pairs_json({p});
  inst.push_back(a.to_string());
  return exact_equal(eq, inst, "avol(aP) = a^2 avol(P) with a = " + a.to_string());
}

inline InstanceResult zariski(Sampler& s) {
  Pair p = s.zariski_pair();
  ZariskiPart z = zariski_positive_part(p);
  bool eq = avol(Pair(z.positive)) == avol(p);
  bool nef = is_nef(z.positive);
  bool below = precedes(z.positive, p);
  return exact_equal(eq && nef && below, pairs_json({p}),
                     std::string("volume ") + (eq ? "kept" : "changed") + ", nef " + (nef ? "yes" : "no") +
                         ", below " + (below ? "yes" : "no"));
}

inline InstanceResult siu(Sampler& s) {
  ToricAdelicDivisor m = s.nef();
  ToricAdelicDivisor n = s.nef(false);
  Quantity lhs = Quantity(adeg_product(m, m)) - Quantity(2) * Quantity(adeg_product(m, n));
  Quantity rhs(avol(Pair(m - n)));
  return from_case(make_case("siu", lhs, rhs, kInequalityTolerance), pairs_json({Pair(m), Pair(n)}));
}

inline InstanceResult hodge(Sampler& s) {
  ToricAdelicDivisor d = s.degree_zero();
  Quantity self(adeg_product(d, d));
  return from_case(make_case("hodge", self, Quantity(0), kInequalityTolerance), pairs_json({Pair(d)}));
}

inline InstanceResult kt(Sampler& s) {
  ToricAdelicDivisor d = s.nef(false);
  ToricAdelicDivisor e = s.nef(false);
  Quantity de(adeg_product(d, e));
  Quantity lhs = Quantity(adeg_product(d, d)) * Quantity(adeg_product(e, e));
  return from_case(make_case("kt", lhs, de * de, kInequalityTolerance), pairs_json({Pair(d), Pair(e)}));
}

inline Place random_place(Sampler& s, const Pair& p) {
  std::vector<Place> places{Place::archimedean()};
  for (const auto& [v, g] : p.divisor.potentials()) {
    if (!v.is_archimedean()) places.push_back(v);
  }
  if (s.coin()) places.push_back(Place::finite(static_cast<std::uint64_t>(std::vector<int>{2, 3, 5, 7}[s.integer(0, 3)])));
  return places[s.integer(0, static_cast<long>(places.size()) - 1)];
}

inline InstanceResult continuity(Sampler& s) {
  Pair p = s.big_pair();
  Place v = random_place(s, p);
  LinePA phi = s.bounded();
  Quantity norm(phi.sup_norm());
  if (!v.is_archimedean()) norm = norm * Quantity(RealInterval::log_of(BigInt(static_cast<unsigned long>(v.prime())), kHarnessBits));
  Quantity change = (Quantity(avol(perturb(p, v, phi))) - Quantity(avol(p))).abs();
  Quantity bound = Quantity(Rational(2) * shifted_polytope(p).length()) * norm;
  Json inst = pairs_json({p});
  inst.push_back(Json{{"place", v.to_string()}, {"phi", to_json(phi)}});
  return from_case(make_case("lipschitz", change, bound, kInequalityTolerance), inst);
}

inline InstanceResult min_valuation(Sampler& s) {
  std::vector<ToricAdelicDivisor> ds;
  long n = s.integer(2, 4);
  for (long i = 0; i < n; ++i) ds.push_back(s.effective());
  ToricAdelicDivisor m = min_adelic(ds);
  bool ok = true;
  for (const auto& pt : {ClosedPoint::zero(), ClosedPoint::infinity()}) {
    Rational want = ord(ds[0].divisor(), pt);
    for (const auto& d : ds) want = min(want, ord(d.divisor(), pt));
    ok = ok && ord(m.divisor(), pt) == want;
  }
  std::set<Place> places{Place::archimedean()};
  for (const auto& d : ds) {
    for (const auto& [v, g] : d.potentials()) places.insert(v);
  }
  for (const auto& v : places) {
    for (long k = -48; k <= 48; ++k) {
      Rational u(k, 8);
      Rational want = ds[0].potential(v).eval(u);
      for (const auto& d : ds) want = min(want, d.potential(v).eval(u));
      ok = ok && m.potential(v).eval(u) == want;
    }
  }
  Json inst = Json::array();
  for (const auto& d : ds) inst.push_back(to_json(d));
  return exact_equal(ok, inst, "min of coefficients and potentials");
}

inline InstanceResult legendre_involution(Sampler& s) {
  Rational sl = s.rational(-4, 4);
  Rational sr = sl + s.rational(0, 4);
  ConvexPA g(s.convex(sl, sr));
  ConcavePA<Rational> roof = legendre_roof(g);
  bool back = legendre_potential(roof) == g;
  bool again = legendre_roof(legendre_potential(roof)) == roof;
  Json inst{{"potential", to_json(g.function())}};
  return exact_equal(back && again, inst, "potential -> roof -> potential");
}

inline InstanceResult openness(Sampler& s) {
  Pair p = s.big_pair();
  Rational eps = lower_rational(global_roof(p).max_value());
  Json inst = pairs_json({p});
  if (eps.sign() <= 0) return {false, -1.0, inst.dump(), "no positive margin"};
  const Place inf = Place::archimedean();
  bool ok = is_big(perturb(p, inf, LinePA::constant(-eps)));
  LinePA phi = s.bounded();
  Rational norm = phi.sup_norm();
  if (norm.sign() > 0) {
    // |phi| <= eps in metric units; log 7 < 2.
    LinePA scaled = phi.scaled(eps / norm);
    ok = ok && is_big(perturb(p, inf, scaled));
    ok = ok && is_big(perturb(p, Place::finite(7), scaled.scaled(Rational(1, 2))));
  }
  return {ok, ok ? eps.to_double() : -1.0, inst.dump(), "margin " + eps.to_string()};
}

// |volume_estimate - avol| <= C / m.
inline double oracle_constant(const Pair& p) {
  double logs = std::log(3.0);
  for (const auto& [v, g] : p.divisor.potentials()) {
    if (!v.is_archimedean()) logs += std::log(static_cast<double>(v.prime()));
  }
  double top = std::max(0.0, global_roof(p).max_value().to_double());
  double len = shifted_polytope(p).length().to_double();
  return 16.0 * top + 2.0 * (len + 1.0) * logs;
}

inline InstanceResult oracle_check(const Pair& p, const std::vector<long>& ms, const std::function<double(long)>& bound) {
  double target = avol(p).to_double();
  std::vector<InstanceResult> rs;
  Json inst = pairs_json({p});
  for (long m : ms) {
    double est = volume_estimate(p, m).midpoint();
    double e = std::abs(est - target);
    double b = bound(m);
    rs.push_back({e <= b, b - e, inst.dump(),
                  "m=" + std::to_string(m) + " error " + std::to_string(e) + " bound " + std::to_string(b)});
  }
  return merge(rs);
}

inline InstanceResult oracle_convergence(Sampler& s, long index) {
  if (index == 0) {
    Pair e1 = Pair(ToricAdelicDivisor(Rational(1), Rational(0))
                       .with_potential(Place::archimedean(), LinePA({{Rational(1), Rational(1)}}, Rational(0), Rational(1))));
    return oracle_check(e1, {64, 256}, [](long m) { return 4.0 / static_cast<double>(m); });
  }
  Pair p = s.big_pair();
  double c = oracle_constant(p);
  return oracle_check(p, {16, 64}, [c](long m) { return c / static_cast<double>(m); });
}

inline InstanceResult okounkov_match(Sampler& s) {
  Pair p = s.big_pair();
  OkounkovData data = analytic_okounkov(p);
  Json inst = pairs_json({p});
  bool twice = data.volume * Rational(2) == avol(p);
  const long m = 64;
  double logs = 0;
  for (const auto& [v, g] : p.divisor.potentials()) {
    if (!v.is_archimedean()) logs += std::log(static_cast<double>(v.prime()));
  }
  double bound = logs / m + 1e-12;
  double worst = 0;
  bool below = true;
  for (const auto& [w, t] : okounkov_sample(p, m).points) {
    double gap = (Quantity(ExactReal(data.transform.eval(w))) - Quantity(ExactReal(t))).value();
    below = below && gap >= -1e-12;
    worst = std::max(worst, gap);
  }
  bool ok = twice && below && worst <= bound;
  return {ok, bound - worst, inst.dump(),
          std::string("volume ") + (twice ? "matches" : "differs") + ", sup gap " + std::to_string(worst)};
}

inline InstanceResult diskant_like(Sampler& s, bool bonnesen_only) {
  Pair p1 = s.zariski_pair();
  Pair p2 = s.zariski_pair();
  DiskantReport rep = diskant_report(p1, p2);
  Json inst = pairs_json({p1, p2});
  std::vector<InstanceResult> rs;
  for (const auto& c : rep.cases) {
    bool relevant = bonnesen_only ? c.name == "bonnesen" : c.name != "bonnesen";
    if (relevant) rs.push_back(from_case(c, inst));
  }
  return merge(rs);
}

inline InstanceResult superadditivity(Sampler& s) {
  Pair p1 = s.zariski_pair();
  Pair p2 = s.zariski_pair();
  ToricAdelicDivisor n = s.nef(false);
  Json inst = pairs_json({p1, p2, Pair(n)});
  try {
    Quantity lhs = Quantity(positive_intersection(p1, n)) + Quantity(positive_intersection(p2, n));
    Quantity rhs(positive_intersection(p1 + p2, n));
    return from_case(make_case("superadditive", lhs, rhs, kInequalityTolerance), inst);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kIrrationalCrossing) throw;
    return superadditivity(s);
  }
}

inline InstanceResult differentiability(Sampler& s) {
  Pair p = s.zariski_pair();
  ToricAdelicDivisor d = s.integrable();
  DerivativeReport rep = check_differentiability(p, d, {dyadic(10)});
  Json inst = pairs_json({p, Pair(d)});
  double scale = std::ldexp(1.0, -20) * (1.0 + std::abs(rep.analytic.to_double()));
  return {rep.pass, scale - rep.max_deviation, inst.dump(),
          "deviation " + std::to_string(rep.max_deviation) + (rep.exact_agreement ? " (exact)" : "")};
}

inline InstanceResult run_instance(const std::string& name, Sampler& s, long index) {
  if (name == "brunn_minkowski") return brunn_minkowski(s);
  if (name == "homogeneity") return homogeneity(s);
  if (name == "zariski") return zariski(s);
  if (name == "siu") return siu(s);
  if (name == "hodge") return hodge(s);
  if (name == "kt") return kt(s);
  if (name == "continuity") return continuity(s);
  if (name == "min_valuation") return min_valuation(s);
  if (name == "legendre_involution") return legendre_involution(s);
  if (name == "openness") return openness(s);
  if (name == "oracle_convergence") return oracle_convergence(s, index);
  if (name == "okounkov_match") return okounkov_match(s);
  if (name == "diskant_random") return diskant_like(s, false);
  if (name == "bonnesen_random") return diskant_like(s, true);
  if (name == "superadditivity") return superadditivity(s);
  if (name == "differentiability") return differentiability(s);
  throw Error(ErrorCode::kUnknownSuite, "unknown suite " + name);
}

}  // namespace internal

// Instance i draws from its own generator seeded by (seed, i).
inline SuiteSummary run_suite(const std::string& name, long count, std::uint64_t seed,
                              SamplerOptions options = {}) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    throw Error(ErrorCode::kUnknownSuite, "unknown suite " + name);
  }
  if (count < 0) throw Error(ErrorCode::kInvalidArgument, "count must be nonnegative");
  SuiteSummary sum{name, count, seed};
  for (long i = 0; i < count; ++i) {
    Sampler s(internal::instance_seed(seed, i), options);
    InstanceResult r = internal::run_instance(name, s, i);
    if (r.pass) ++sum.passed;
    if (sum.worst_index < 0 || r.slack < sum.worst_slack) {
      sum.worst_slack = r.slack;
      sum.worst_index = i;
    }
    if (!r.pass && !sum.first_failure) {
      sum.first_failure = r;
      sum.first_failure_index = i;
    }
  }
  return sum;
}

}  // namespace adelic
