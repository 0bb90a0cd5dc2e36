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

// Acceptance checks. One line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "adelic/harness.hpp"
#include "adelic/standard.hpp"

namespace {

using namespace adelic;
using standard::e1;
using standard::e1_half;
using standard::e2;
using standard::o;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

Rational q(const char* s) { return Rational::parse(s); }

Outcome exact_volumes() {
  Outcome out;
  struct Case {
    const char* name;
    Pair pair;
    Rational want;
  };
  std::vector<Case> cases{{"E1", Pair(e1()), q("1")},
                          {"E2", Pair(e2()), q("2")},
                          {"E1+E2", Pair(e1() + e2()), q("7")},
                          {"(E1;1/2[0])", e1_half(), q("1/4")}};
  for (const auto& c : cases) {
    auto t0 = Clock::now();
    ExactReal v = avol(c.pair);
    double dt = seconds_since(t0);
    out.require(v.rational() == c.want, std::string(c.name) + " gave " + v.to_string());
    out.require(dt < 1e-3, std::string(c.name) + " took " + std::to_string(dt) + " s");
  }
  if (out.pass) out.detail = "avol = 1, 2, 7, 1/4 exactly";
  return out;
}

Outcome theorem_a() {
  Outcome out;
  auto t0 = Clock::now();
  DerivativeReport a = check_differentiability(Pair(e1()), o());
  out.require(a.exact_agreement && a.right.value == ExactReal(2) && a.analytic == ExactReal(2),
              "(E1, O): derivative " + a.right.value.to_string() + " vs " + a.analytic.to_string());
  DerivativeReport b = check_differentiability(e1_half(), o());
  out.require(b.exact_agreement && b.right.value == ExactReal(1) && b.analytic == ExactReal(1),
              "((E1;1/2[0]), O): derivative " + b.right.value.to_string() + " vs " + b.analytic.to_string());
  SuiteSummary s = run_suite("differentiability", 200, 7);
  out.require(s.pass(), "random suite " + std::to_string(s.passed) + "/200");
  double dt = seconds_since(t0);
  out.require(dt < 10, "took " + std::to_string(dt) + " s");
  if (out.pass) out.detail = "2 = 2, 1 = 1 exactly; 200/200 random within 2^-20";
  return out;
}

Outcome theorem_b() {
  Outcome out;
  auto t0 = Clock::now();
  DiskantReport rep = diskant_report(Pair(e1()), Pair(e2()));
  out.require(rep.s0.exact() == q("2") && rep.s1.exact() == q("2") && rep.s2.exact() == q("1"),
              "s = (" + rep.s0.to_string() + ", " + rep.s1.to_string() + ", " + rep.s2.to_string() + ")");
  Rational tol = dyadic(40);
  out.require(abs(rep.r.lo - q("1/2")) <= tol && abs(rep.r.hi - q("1/2")) <= tol, "r = " + rep.r.to_string());
  out.require(abs(rep.big_r.lo - q("1")) <= tol && abs(rep.big_r.hi - q("1")) <= tol, "R = " + rep.big_r.to_string());
  for (const auto& c : rep.cases) out.require(c.pass && c.slack.value() >= 0, c.name + " slack " + c.slack.to_string());
  out.require(rep.at("bonnesen").slack.exact() == q("7/4"), "Bonnesen slack " + rep.at("bonnesen").slack.to_string());
  SuiteSummary d = run_suite("diskant_random", 200, 7);
  SuiteSummary b = run_suite("bonnesen_random", 200, 7);
  out.require(d.pass(), "diskant_random " + std::to_string(d.passed) + "/200");
  out.require(b.pass(), "bonnesen_random " + std::to_string(b.passed) + "/200");
  double dt = seconds_since(t0);
  out.require(dt < 30, "took " + std::to_string(dt) + " s");
  if (out.pass) out.detail = "s = (2, 2, 1), r = 1/2, R = 1, Bonnesen slack 7/4; 400/400 random";
  return out;
}

Outcome oracle_convergence() {
  Outcome out;
  auto t0 = Clock::now();
  Pair p(e1());
  RealInterval m1 = volume_estimate(p, 1) - RealInterval::log_of(BigInt(15)) * RealInterval::from_integer(BigInt(2));
  out.require(std::abs(m1.midpoint()) + m1.width() < 1e-30, "m = 1 differs from 2 log 15");
  RealInterval m2 = volume_estimate(p, 2) - RealInterval::log_of(BigInt(225)) * RealInterval::from_rational(q("1/2"));
  out.require(std::abs(m2.midpoint()) + m2.width() < 1e-30, "m = 2 differs from 2 log 225 / 4");
  double prev = INFINITY;
  std::string errs;
  for (long m : {4, 16, 64, 256}) {
    double est = volume_estimate(p, m).midpoint();
    out.require(est < prev, "not decreasing at m = " + std::to_string(m));
    prev = est;
    if (m >= 64) {
      double err = std::abs(est - 1.0);
      out.require(err <= 4.0 / static_cast<double>(m), "m = " + std::to_string(m) + " error " + std::to_string(err));
      errs += (errs.empty() ? "" : ", ") + std::to_string(err);
    }
  }
  double dt = seconds_since(t0);
  out.require(dt < 5, "took " + std::to_string(dt) + " s");
  if (out.pass) out.detail = "2 log 15, log 225 / 2; errors " + errs + " at m = 64, 256; decreasing";
  return out;
}

Outcome okounkov() {
  Outcome out;
  OkounkovData d = analytic_okounkov(Pair(e1()));
  out.require(d.volume == ExactReal(q("1/2")), "body volume " + d.volume.to_string());
  out.require(avol(Pair(e1())) == d.volume * Rational(2), "avol differs from twice the body volume");
  double sup = 0;
  for (const auto& [w, t] : okounkov_sample(Pair(e1()), 64).points) {
    sup = std::max(sup, std::abs(d.transform.eval(w).to_double() - t.to_double()));
  }
  out.require(sup <= 0.05, "sup gap " + std::to_string(sup));
  if (out.pass) out.detail = "vol = 1/2, avol = 2 * 1/2, sup gap " + std::to_string(sup) + " at m = 64";
  return out;
}

Outcome property_suites() {
  Outcome out;
  auto t0 = Clock::now();
  const char* names[] = {"brunn_minkowski", "homogeneity",   "zariski",             "siu",      "hodge",
                         "kt",              "min_valuation", "legendre_involution", "openness", "superadditivity"};
  long failures = 0;
  for (const char* n : names) {
    SuiteSummary s = run_suite(n, 200, 7);
    failures += s.count - s.passed;
    out.require(s.pass(), std::string(n) + " " + std::to_string(s.passed) + "/200");
  }
  double dt = seconds_since(t0);
  out.require(dt < 120, "took " + std::to_string(dt) + " s");
  if (out.pass) out.detail = "10 suites x 200, " + std::to_string(failures) + " failures";
  return out;
}

Outcome equality_case() {
  Outcome out;
  DiskantReport rep = diskant_report(Pair(e1()), Pair(e1().scaled(q("2"))));
  const Rational half = q("1/2");
  bool exact = rep.s0.exact() && rep.s1.exact() && rep.s2.exact();
  out.require(exact, "s not exact");
  if (exact) {
    Rational s0 = *rep.s0.exact(), s1 = *rep.s1.exact(), s2 = *rep.s2.exact();
    out.require(rep.r.is_exact() && rep.r.lo == half, "r = " + rep.r.to_string());
    out.require(rep.big_r.is_exact() && rep.big_r.lo == half, "R = " + rep.big_r.to_string());
    out.require(s1 / s0 == half && s2 / s1 == half, "ratios " + (s1 / s0).to_string() + ", " + (s2 / s1).to_string());
    out.require(s1 * s1 == s0 * s2, "s1^2 != s0 s2");
  }
  if (out.pass) out.detail = "r = R = s1/s0 = s2/s1 = 1/2, s1^2 = s0 s2 = 4";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{{"exact volumes", exact_volumes},
                                  {"differentiability of the volume", theorem_a},
                                  {"Diskant and Bonnesen inequalities", theorem_b},
                                  {"section-count convergence", oracle_convergence},
                                  {"Okounkov body consistency", okounkov},
                                  {"property suites", property_suites},
                                  {"equality case", equality_case}};
  bool all = true;
  int i = 1;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i++ << ". " << c.name << ": " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
