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

#include <random>

#include "adelic/valuations.hpp"
#include "test_util.hpp"

namespace adelic {
namespace {

using testing::Q;

Polynomial P(const char* s) { return Polynomial::parse(s); }

TEST(Polynomial, ParseAndPrint) {
  EXPECT_EQ(P("t^2+1").to_string(), "t^2+1");
  EXPECT_EQ(P("2*t^3 - t + 1/2").to_string(), "2*t^3-t+1/2");
  EXPECT_EQ(P("-t").to_string(), "-t");
  EXPECT_EQ(P("t^2 + t - t").to_string(), "t^2");
  EXPECT_THROW(P("t^"), Error);
  EXPECT_THROW(P("2t"), Error);
}

TEST(Polynomial, DivisionAndGcd) {
  Polynomial a = P("t^2-1");
  auto [q, r] = Polynomial::divmod(a, P("t-1"));
  EXPECT_EQ(q, P("t+1"));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(Polynomial::gcd(P("t^2-1"), P("t^2+2*t+1")), P("t+1"));
}

TEST(Irreducibility, KnownCases) {
  EXPECT_TRUE(is_irreducible(P("t^2+1")));
  EXPECT_TRUE(is_irreducible(P("t-1/2")));
  EXPECT_FALSE(is_irreducible(P("t^2-1")));
  EXPECT_TRUE(is_irreducible(P("t^2-2")));
  EXPECT_TRUE(is_irreducible(P("t^3-2")));
  // Reducible without rational roots.
  EXPECT_FALSE(is_irreducible(P("t^4+4")));           // (t^2+2t+2)(t^2-2t+2)
  EXPECT_FALSE(is_irreducible(P("t^4+2*t^2+1")));     // square
  EXPECT_FALSE(is_irreducible(P("t^6+2*t^4+2*t^3+t^2+2*t+1")));  // (t^3+t+1)^2
  // Irreducible over Q but reducible modulo every prime.
  EXPECT_TRUE(is_irreducible(P("t^4+1")));
  EXPECT_TRUE(is_irreducible(P("t^4-10*t^2+1")));
  EXPECT_TRUE(is_irreducible(P("t^8+1")));
  EXPECT_THROW(is_irreducible(P("t^9+1")), Error);
}

// Products of two random integer polynomials are never irreducible; random
// degree-2 polynomials are irreducible exactly when the discriminant is not
// a square, which is an independent check.
TEST(Irreducibility, RandomProductsAndQuadratics) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    int da = 1 + trial % 3;
    int db = 1 + (trial / 3) % 3;
    std::vector<Rational> a(da + 1), b(db + 1);
    for (auto& c : a) c = Rational(coef(rng));
    for (auto& c : b) c = Rational(coef(rng));
    a.back() = Rational(1);
    b.back() = Rational(1);
    EXPECT_FALSE(is_irreducible(Polynomial(a) * Polynomial(b)));
  }
  for (int b = -6; b <= 6; ++b) {
    for (int c = -6; c <= 6; ++c) {
      long disc = static_cast<long>(b) * b - 4L * c;
      bool square = false;
      for (long s = 0; s * s <= disc; ++s) square = square || s * s == disc;
      Polynomial f({Rational(c), Rational(b), Rational(1)});
      EXPECT_EQ(is_irreducible(f), !square) << f.to_string();
    }
  }
}

TEST(ClosedPoint, ConstructionRules) {
  EXPECT_EQ(ClosedPoint::parse("0"), ClosedPoint::zero());
  EXPECT_EQ(ClosedPoint::parse("inf"), ClosedPoint::infinity());
  EXPECT_EQ(ClosedPoint::parse("t"), ClosedPoint::zero());
  EXPECT_EQ(ClosedPoint::parse("2*t^2+2").to_string(), "t^2+1");
  EXPECT_EQ(ClosedPoint::parse("t^2+1").residue_degree(), 2);
  EXPECT_THROW(ClosedPoint::finite(P("t")), Error);
  EXPECT_THROW(ClosedPoint::finite(P("t^2-1")), Error);
  EXPECT_THROW(ClosedPoint::finite(P("3")), Error);
}

TEST(Ord, Examples) {
  ClosedPoint q = ClosedPoint::parse("t^2+1");
  RDivisor d{{ClosedPoint::zero(), Q(3)}, {q, Q(-2)}};
  EXPECT_EQ(ord(d, q), Q(-2));
  EXPECT_EQ(ord(RDivisor(), q), Q(0));
  RDivisor div_t = principal_divisor(FactoredFunction{{Polynomial::t(), Q(1)}});
  EXPECT_EQ(ord(div_t, ClosedPoint::zero()), Q(1));
}

TEST(PrincipalDivisor, Examples) {
  RDivisor a = principal_divisor(FactoredFunction{{Polynomial::t(), Q(1)}});
  EXPECT_EQ(a, (RDivisor{{ClosedPoint::zero(), Q(1)}, {ClosedPoint::infinity(), Q(-1)}}));
  RDivisor b = principal_divisor(FactoredFunction{{P("t^2+1"), Q(1)}});
  EXPECT_EQ(b, (RDivisor{{ClosedPoint::parse("t^2+1"), Q(1)}, {ClosedPoint::infinity(), Q(-2)}}));
  EXPECT_EQ(b.weighted_degree(), Q(0));
  RDivisor c = principal_divisor(FactoredFunction{{Polynomial::t(), Q("1/2")}});
  EXPECT_EQ(c, (RDivisor{{ClosedPoint::zero(), Q("1/2")}, {ClosedPoint::infinity(), Q("-1/2")}}));
}

TEST(PrincipalDivisor, AdditiveAndDegreeZero) {
  std::vector<Polynomial> irreducibles = {Polynomial::t(), P("t-1"), P("t+2"), P("t^2+1"), P("t^3-2"), P("t^2+t+1")};
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(irreducibles.size()) - 1);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  auto random_function = [&] {
    FactoredFunction f;
    for (int k = 0; k < 3; ++k) f.multiply(irreducibles[pick(rng)], Rational(num(rng), den(rng)));
    return f;
  };
  for (int trial = 0; trial < 100; ++trial) {
    FactoredFunction f = random_function();
    FactoredFunction g = random_function();
    EXPECT_EQ(principal_divisor(f * g), principal_divisor(f) + principal_divisor(g));
    EXPECT_EQ(principal_divisor(f).weighted_degree(), Q(0));
    RDivisor sum = principal_divisor(f) + principal_divisor(g);
    for (const auto& [p, c] : sum.entries()) {
      EXPECT_EQ(ord(sum, p),
                ord(principal_divisor(f), p) + ord(principal_divisor(g), p));
    }
  }
}

TEST(BaseCondition, PositiveNegativeSupport) {
  BaseCondition v{{ClosedPoint::zero(), Q("1/2")}, {ClosedPoint::infinity(), Q(-1)}};
  EXPECT_EQ(positive_part(v), (BaseCondition{{ClosedPoint::zero(), Q("1/2")}}));
  EXPECT_EQ(negative_part(v), (BaseCondition{{ClosedPoint::infinity(), Q(1)}}));
  EXPECT_EQ(positive_part(v) - negative_part(v), v);
  BaseCondition eff{{ClosedPoint::zero(), Q(2)}};
  EXPECT_TRUE(negative_part(eff).is_zero());
  EXPECT_EQ(support(v), (std::set<ClosedPoint>{ClosedPoint::zero(), ClosedPoint::infinity()}));
}

}  // namespace
}  // namespace adelic
