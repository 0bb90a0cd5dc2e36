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

#include <gtest/gtest.h>

#include <cmath>

#include "adelic/positivity.hpp"
#include "adelic/standard.hpp"
#include "test_util.hpp"

namespace adelic {
namespace {

using standard::e1;
using standard::e1_half;
using standard::e2;
using standard::o;
using testing::line;
using testing::Q;

const Place kInf = Place::archimedean();

ExactReal exact(const char* s) { return ExactReal(Q(s)); }

// E1 with the 2-adic potential max(0, w - 1/2) in log-2 units.
ToricAdelicDivisor e1_2adic() {
  return e1().with_potential(Place::finite(2), line({{Q("1/2"), Q(0)}}, Q(0), Q(1)));
}

// Slopes 0, 1, 0, 1: not convex.
ToricAdelicDivisor bent_e1() {
  return ToricAdelicDivisor(Q(1), Q(0)).with_potential(kInf, line({{Q(0), Q(0)}, {Q(1), Q(1)}, {Q(2), Q(1)}}, Q(0), Q(1)));
}

// max(|w|, 1) at p on top of E2; roof (1 - |x|)(1 + log p).
ToricAdelicDivisor e2_at(std::uint64_t p) {
  return e2().with_potential(Place::finite(p), line({{Q(-1), Q(1)}, {Q(1), Q(1)}}, Q(-1), Q(1)));
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

TEST(Nef, Examples) {
  EXPECT_TRUE(is_nef(e1()));
  EXPECT_FALSE(is_ample(e1()));
  EXPECT_TRUE(is_nef(e2()));
  EXPECT_TRUE(is_nef(e1() + e2()));
  EXPECT_EQ(certify_nef(e1() + e2())->min_roof_value, LogLinear(0));
  ToricAdelicDivisor bent = bent_e1();
  EXPECT_FALSE(is_relatively_nef(bent));
  EXPECT_FALSE(is_nef(bent));
  EXPECT_EQ(code_of([&] { is_w_ample(bent); }), ErrorCode::kNotRelativelyNef);
  // Lifting the potential of E2 by 1 makes every roof value positive.
  ToricAdelicDivisor lifted = e2().with_potential(kInf, e2().potential(kInf) + LinePA::constant(Q(1)));
  EXPECT_TRUE(is_ample(lifted));
  EXPECT_TRUE(is_w_ample(lifted));
  EXPECT_FALSE(is_w_ample(e2()));
}

TEST(Avol, Examples) {
  EXPECT_EQ(avol(Pair(e1())), exact("1"));
  EXPECT_EQ(avol(Pair(e2())), exact("2"));
  EXPECT_EQ(avol(Pair(e1() + e2())), exact("7"));
  EXPECT_EQ(avol(e1_half()), exact("1/4"));
  EXPECT_EQ(avol(Pair(e1() + o())), exact("3"));
  EXPECT_EQ(avol(Pair(o())), exact("0"));
  EXPECT_EQ(avol(Pair(e1(), BaseCondition{{ClosedPoint::zero(), Q(2)}})), exact("0"));
  EXPECT_EQ(code_of([] { avol(Pair(e1(), BaseCondition{{ClosedPoint::parse("t^2+1"), Q(1)}})); }),
            ErrorCode::kNonToricBaseCondition);
}

TEST(Avol, FinitePlaceAgainstQuadrature) {
  // Roof 1 - x - (log 2 / 2) x on [0, 1]; zero at 1 / (1 + log 2 / 2).
  ExactReal v = avol(Pair(e1_2adic()));
  EXPECT_NEAR(v.to_double(), 0.742625584831264322925160272017, 1e-15);
  RealInterval b = v.bracket(256) - RealInterval::from_rational(Q("742625584831264322925160272017/1000000000000000000000000000000"), 256);
  EXPECT_LT(std::abs(b.midpoint()), 1e-28);
}

TEST(Avol, LineFamily) {
  // avol(E1 + r E2) = 1 + 4r + 2r^2 for r >= 0; (1 - 2|r|)^2 for -1/2 <= r < 0.
  for (int k = -8; k <= 8; ++k) {
    Rational r(k, 16);
    Rational expect = r.sign() >= 0 ? Rational(1) + Rational(4) * r + Rational(2) * r * r
                                    : pow(Rational(1) - Rational(2) * abs(r), 2);
    EXPECT_EQ(avol(Pair(e1() + e2().scaled(r))), ExactReal(expect)) << r.to_string();
  }
}

TEST(Big, Examples) {
  EXPECT_TRUE(is_big(Pair(e1())));
  Pair edge(e1() - e2().scaled(Q("1/2")));
  EXPECT_TRUE(is_pseff(edge));
  EXPECT_FALSE(is_big(edge));
  Pair empty(e1(), BaseCondition{{ClosedPoint::zero(), Q(2)}});
  EXPECT_FALSE(is_pseff(empty));
  EXPECT_FALSE(is_big(empty));
  EXPECT_FALSE(is_pseff(Pair(e1() - e2().scaled(Q("3/5")))));
}

TEST(Zariski, Examples) {
  ToricAdelicDivisor d = e1() + e2();
  EXPECT_EQ(zariski_positive_part(Pair(d)).positive, d);
  ZariskiPart half = zariski_positive_part(e1_half());
  EXPECT_EQ(polytope(half.positive), Interval(Q("1/2"), Q(1)));
  EXPECT_EQ(avol(Pair(half.positive)), exact("1/4"));
  EXPECT_TRUE(is_nef(half.positive));
  EXPECT_TRUE(precedes(half.positive, e1_half()));

  ZariskiPart quarter = zariski_positive_part(Pair(e1() - e2().scaled(Q("1/4"))));
  EXPECT_EQ(polytope(quarter.positive), Interval(Q("1/4"), Q("3/4")));
  EXPECT_EQ(avol(Pair(quarter.positive)), exact("1/4"));
  EXPECT_EQ(global_roof(Pair(quarter.positive)),
            ConcavePA<LogLinear>({{Q("1/4"), LogLinear(Q("1/2"))}, {Q("3/4"), LogLinear(0)}}));

  EXPECT_EQ(code_of([] { zariski_positive_part(Pair(o())); }), ErrorCode::kNotBig);
  EXPECT_EQ(code_of([] { zariski_positive_part(Pair(e1_2adic())); }), ErrorCode::kIrrationalCrossing);
}

TEST(Adeg, Examples) {
  EXPECT_EQ(adeg_product(e1(), e1()), exact("1"));
  EXPECT_EQ(adeg_product(e1(), e2()), exact("2"));
  EXPECT_EQ(adeg_product(e2(), e1()), exact("2"));
  EXPECT_EQ(adeg_product(e1(), o()), exact("1"));
  EXPECT_EQ(adeg_product(o(), o()), exact("0"));
}

TEST(Adeg, DecompositionIndependence) {
  ToricAdelicDivisor a = e1() - e2().scaled(Q("3/2"));
  ToricAdelicDivisor b = e2() - e1().scaled(Q(2)) + o();
  EXPECT_FALSE(is_nef(a));
  ExactReal base = adeg_product(a, b);
  for (unsigned ea : {0u, 1u, 3u}) {
    for (unsigned eb : {0u, 2u}) {
      EXPECT_EQ(adeg_product(a, b, ea, eb), base);
    }
  }
  // Bilinear expansion of the nef examples.
  EXPECT_EQ(base, ExactReal(adeg_product(e1(), e2())) - ExactReal(adeg_product(e1(), e1()) * Q(2)) +
                      adeg_product(e1(), o()) - adeg_product(e2(), e2()) * Q("3/2") +
                      adeg_product(e2(), e1()) * Q(3) - adeg_product(e2(), o()) * Q("3/2"));
  auto [plus, minus] = nef_decomposition(a, 2);
  EXPECT_TRUE(is_nef(plus));
  EXPECT_TRUE(is_nef(minus));
  EXPECT_EQ(plus - minus, a);
}

TEST(Adeg, FinitePlaces) {
  // adeg(D . D) = avol(D) for nef D, including symbolic logs.
  ToricAdelicDivisor d = e2_at(3);
  ASSERT_TRUE(is_nef(d));
  ExactReal expect(LogLinear(Q(2)) + LogLinear::log_unit(3, Q(2)));
  EXPECT_EQ(avol(Pair(d)), expect);
  EXPECT_EQ(adeg_product(d, d), expect);
  EXPECT_NEAR(adeg_product(d, d, 1, 2).to_double(), expect.to_double(), 1e-12);
  EXPECT_NEAR(adeg_product(d - e1().scaled(Q(3)), e2_at(5), 2, 1).to_double(),
              adeg_product(d, e2_at(5)).to_double() - 3 * adeg_product(e1(), e2_at(5)).to_double(), 1e-12);
}

TEST(PositiveIntersection, Examples) {
  EXPECT_EQ(positive_intersection(Pair(e1()), e1()), exact("1"));
  EXPECT_EQ(positive_intersection(Pair(e1()), o()), exact("1"));
  EXPECT_EQ(positive_intersection(e1_half(), o()), exact("1/2"));
  EXPECT_EQ(avol(Pair(zariski_positive_part(e1_half()).positive + o())), exact("5/4"));
  EXPECT_EQ(code_of([] { positive_intersection(Pair(o()), e1()); }), ErrorCode::kNotBig);
}

TEST(Threshold, Examples) {
  EXPECT_EQ(pseff_threshold(Pair(e1()), e1()).to_string(), "1");
  EXPECT_EQ(pseff_threshold(Pair(e1()), e2()).to_string(), "1/2");
  EXPECT_EQ(pseff_threshold(Pair(e2()), e1()).to_string(), "1");
  EXPECT_EQ(code_of([] { pseff_threshold(Pair(o()), e1()); }), ErrorCode::kNotBig);
  EXPECT_EQ(code_of([] { pseff_threshold(Pair(e1()), bent_e1()); }), ErrorCode::kNotNef);
}

TEST(Threshold, IrrationalByBisection) {
  // Roof of E1 - t N is 1 - t - x - t log 5 on [t, 1 - t]; threshold
  // 1 / (2 + log 5).
  RationalBracket b = pseff_threshold(Pair(e1()), e2_at(5));
  EXPECT_FALSE(b.is_exact());
  EXPECT_LE(b.width(), dyadic(40));
  EXPECT_NEAR(b.midpoint().to_double(), 1.0 / (2.0 + std::log(5.0)), 1e-11);
  EXPECT_TRUE(is_pseff(Pair(e1() - e2_at(5).scaled(b.lo))));
  EXPECT_FALSE(is_pseff(Pair(e1() - e2_at(5).scaled(b.hi))));
}

TEST(Radii, Examples) {
  EXPECT_EQ(inradius(Pair(e1()), Pair(e2())).to_string(), "1/2");
  EXPECT_EQ(inradius(Pair(e2()), Pair(e1())).to_string(), "1");
  EXPECT_EQ(circumradius(Pair(e1()), Pair(e2())).to_string(), "1");
  EXPECT_EQ(inradius(Pair(e2()), Pair(e2())).to_string(), "1");
  EXPECT_EQ(inradius(Pair(e1()), Pair(e1().scaled(Q(2)))).to_string(), "1/2");
  EXPECT_EQ(circumradius(Pair(e1()), Pair(e1().scaled(Q(2)))).to_string(), "1/2");
}

TEST(Homogeneity, Exact) {
  for (const Pair& p : {Pair(e1()), Pair(e2()), e1_half(), Pair(e1_2adic())}) {
    for (const char* a : {"1/3", "2", "7/5"}) {
      EXPECT_EQ(avol(p.scaled(Q(a))), avol(p) * (Q(a) * Q(a)));
    }
  }
}

}  // namespace
}  // namespace adelic
