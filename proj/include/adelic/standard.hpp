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

// A few named divisors used throughout the tests, examples and CLI.

#pragma once

#include "adelic/adelic.hpp"

namespace adelic::standard {

// [0] with archimedean potential 1 + max(0, u - 1); roof 1 - x on [0, 1].
inline ToricAdelicDivisor e1() {
  return ToricAdelicDivisor(Rational(1), Rational(0))
      .with_potential(Place::archimedean(), LinePA({{Rational(1), Rational(1)}}, Rational(0), Rational(1)));
}

// [0] + [inf] with archimedean potential 1 + max(|u| - 1, 0); roof 1 - |x|.
inline ToricAdelicDivisor e2() {
  return ToricAdelicDivisor(Rational(1), Rational(1))
      .with_potential(Place::archimedean(),
                      LinePA({{Rational(-1), Rational(1)}, {Rational(1), Rational(1)}}, Rational(-1), Rational(1)));
}

// The zero divisor with archimedean Green function 2, i.e. potential 1.
inline ToricAdelicDivisor o() {
  return ToricAdelicDivisor(Rational(0), Rational(0)).with_potential(Place::archimedean(), LinePA::constant(Rational(1)));
}

// (E1; (1/2)[0])
inline Pair e1_half() {
  return Pair(e1(), BaseCondition{{ClosedPoint::zero(), Rational(1, 2)}});
}

}  // namespace adelic::standard
