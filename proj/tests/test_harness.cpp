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

#include "adelic/harness.hpp"
#include "adelic/standard.hpp"
#include "test_util.hpp"

namespace adelic {
namespace {

using standard::e1;
using standard::e1_half;
using standard::e2;
using standard::o;
using testing::Q;

TEST(Derivative, E1AlongO) {
  DerivativeReport rep = check_differentiability(Pair(e1()), o());
  EXPECT_EQ(rep.analytic, ExactReal(Q(2)));
  EXPECT_TRUE(rep.right.exact);
  EXPECT_TRUE(rep.left.exact);
  EXPECT_EQ(rep.right.value, ExactReal(Q(2)));
  EXPECT_EQ(rep.left.value, ExactReal(Q(2)));
  EXPECT_TRUE(rep.exact_agreement);
  EXPECT_FALSE(rep.kink);
  EXPECT_TRUE(rep.pass);
  // avol(E1 + rO) is 1 + 2r for r >= 0 and (1 + r)^2 below, so the forward
  // difference is exact and the central one is 2 - h/2.
  ASSERT_EQ(rep.table.size(), 9u);
  for (const auto& row : rep.table) {
    EXPECT_EQ(*row.forward.exact(), Q(2));
    EXPECT_EQ(*row.backward.exact(), Q(2) - row.h);
    EXPECT_EQ(*row.central.exact(), Q(2) - row.h / Q(2));
  }
  for (std::size_t i = 1; i < rep.table.size(); ++i) EXPECT_LT(rep.table[i].h, rep.table[i - 1].h);
  EXPECT_DOUBLE_EQ(rep.quadratic_coefficient, 1.0);
}

TEST(Derivative, HalfBaseAlongO) {
  DerivativeReport rep = check_differentiability(e1_half(), o());
  EXPECT_EQ(rep.analytic, ExactReal(Q(1)));
  EXPECT_EQ(rep.right.value, ExactReal(Q(1)));
  EXPECT_EQ(rep.left.value, ExactReal(Q(1)));
  EXPECT_TRUE(rep.exact_agreement);
}

TEST(Derivative, ZeroDirection) {
  DerivativeReport rep = check_differentiability(Pair(e2()), ToricAdelicDivisor());
  EXPECT_EQ(rep.analytic, ExactReal(0));
  EXPECT_EQ(rep.right.value, ExactReal(0));
  EXPECT_TRUE(rep.exact_agreement);
  EXPECT_EQ(rep.max_deviation, 0.0);
}

TEST(Derivative, AlongE2) {
  // avol(E1 + rE2) = 1 + 4r + 2r^2 near 0 from above, (1 + 2r)^2 below.
  DerivativeReport rep = check_differentiability(Pair(e1()), e2());
  EXPECT_EQ(rep.analytic, ExactReal(Q(4)));
  EXPECT_TRUE(rep.exact_agreement);
}

TEST(Derivative, SiuSubCheck) {
  ToricAdelicDivisor a = e2().with_potential(Place::archimedean(), e2().potential(Place::archimedean()) +
                                                                       LinePA::constant(Q(1)));
  DerivativeReport rep = check_differentiability(Pair(e1()), o(), default_steps(), a);
  ASSERT_TRUE(rep.siu_bound.has_value());
  EXPECT_LE(rep.quadratic_coefficient, *rep.siu_bound);
  EXPECT_TRUE(rep.pass);
}

TEST(Derivative, Errors) {
  EXPECT_THROW(check_differentiability(Pair(o()), e1()), Error);
  EXPECT_THROW(check_differentiability(Pair(e1()), o(), {Q(0)}), Error);
}

TEST(Diskant, E1E2) {
  DiskantReport rep = diskant_report(Pair(e1()), Pair(e2()));
  EXPECT_EQ(*rep.s0.exact(), Q(2));
  EXPECT_EQ(*rep.s1.exact(), Q(2));
  EXPECT_EQ(*rep.s2.exact(), Q(1));
  EXPECT_EQ(rep.r.lo, Q("1/2"));
  EXPECT_EQ(rep.r.hi, Q("1/2"));
  EXPECT_EQ(rep.big_r.lo, Q(1));
  EXPECT_EQ(rep.big_r.hi, Q(1));
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(*rep.at("bonnesen").slack.exact(), Q("7/4"));
  EXPECT_EQ(*rep.at("diskant_upper").slack.exact(), Q(1));
  EXPECT_NEAR(rep.at("chain_lower").lhs.value(), (2 - std::sqrt(2.0)) / 2, 1e-15);
  EXPECT_EQ(*rep.at("chain_r_le_s2_over_s1").slack.exact(), Q(0));
  EXPECT_EQ(*rep.at("chain_s1_over_s0_le_R").slack.exact(), Q(0));
  EXPECT_FALSE(rep.has("equality_radii"));
}

TEST(Diskant, ProportionalPairs) {
  for (const Pair& p : {Pair(e2()), e1_half()}) {
    DiskantReport rep = diskant_report(p, p);
    EXPECT_TRUE(rep.pass());
    EXPECT_EQ(rep.r.to_string(), "1");
    EXPECT_EQ(rep.big_r.to_string(), "1");
    for (const auto& c : rep.cases) {
      if (c.name == "diskant_nonneg" || c.name.rfind("equality", 0) == 0) continue;
      EXPECT_EQ(*c.slack.exact(), Q(0)) << c.name;
    }
  }
}

TEST(Diskant, EqualityCase) {
  DiskantReport rep = diskant_report(Pair(e1()), Pair(e1().scaled(Q(2))));
  EXPECT_EQ(*rep.s0.exact(), Q(4));
  EXPECT_EQ(*rep.s1.exact(), Q(2));
  EXPECT_EQ(*rep.s2.exact(), Q(1));
  EXPECT_EQ(rep.r.to_string(), "1/2");
  EXPECT_EQ(rep.big_r.to_string(), "1/2");
  EXPECT_EQ(*rep.s1.exact() / *rep.s0.exact(), Q("1/2"));
  EXPECT_EQ(*rep.s2.exact() / *rep.s1.exact(), Q("1/2"));
  EXPECT_EQ(*rep.at("equality_s1_squared").lhs.exact(), Q(0));
  EXPECT_TRUE(rep.pass());
}

TEST(Diskant, Errors) {
  EXPECT_THROW(diskant_report(Pair(e1()), Pair(o())), Error);
}

TEST(Quantity, SqrtIsExactOnSquares) {
  EXPECT_EQ(*Quantity(Q("9/4")).sqrt().exact(), Q("3/2"));
  EXPECT_FALSE(Quantity(Q(2)).sqrt().exact().has_value());
  EXPECT_NEAR(Quantity(Q(2)).sqrt().value(), std::sqrt(2.0), 1e-15);
}

TEST(Suites, UnknownName) {
  try {
    run_suite("no_such_suite", 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownSuite);
  }
}

TEST(Suites, Deterministic) {
  SuiteSummary a = run_suite("brunn_minkowski", 10, 3);
  SuiteSummary b = run_suite("brunn_minkowski", 10, 3);
  EXPECT_EQ(a.worst_slack, b.worst_slack);
  EXPECT_EQ(a.worst_index, b.worst_index);
}

TEST(Suites, OracleConvergenceOnE1) {
  SuiteSummary s = run_suite("oracle_convergence", 1, 0);
  EXPECT_TRUE(s.pass());
  EXPECT_NEAR(s.worst_slack, 4.0 / 256 - 0.00935347454108114, 1e-12);
}

class AllSuites : public ::testing::TestWithParam<std::string> {};

TEST_P(AllSuites, TwoHundredInstances) {
  SuiteSummary s = run_suite(GetParam(), 200, 7);
  EXPECT_EQ(s.passed, 200) << (s.first_failure ? s.first_failure->detail + "\n" + s.first_failure->instance : "");
}

INSTANTIATE_TEST_SUITE_P(Harness, AllSuites, ::testing::ValuesIn(suite_names()),
                         [](const ::testing::TestParamInfo<std::string>& info) { return info.param; });

}  // namespace
}  // namespace adelic
