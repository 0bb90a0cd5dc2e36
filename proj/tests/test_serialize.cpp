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
#include "adelic/serialize.hpp"
#include "adelic/standard.hpp"
#include "test_util.hpp"

namespace adelic {
namespace {

using testing::Q;

TEST(Serialize, SceneFiles) {
  const std::string dir = ADELIC_SCENE_DIR;
  EXPECT_EQ(load_scene(dir + "/e1.json"), Pair(standard::e1()));
  EXPECT_EQ(load_scene(dir + "/e2.json"), Pair(standard::e2()));
  EXPECT_EQ(load_scene(dir + "/o.json"), Pair(standard::o()));
  EXPECT_EQ(load_scene(dir + "/e1_half.json"), standard::e1_half());
  EXPECT_NEAR(avol(load_scene(dir + "/e1_2adic.json")).to_double(), 0.742625584831264322925160272017, 1e-15);
}

TEST(Serialize, RoundTrip) {
  for (long i = 0; i < 100; ++i) {
    Sampler s(static_cast<std::uint64_t>(i));
    Pair p = s.big_pair();
    EXPECT_EQ(pair_from_json(to_json(p)), p);
    EXPECT_EQ(pair_from_string(to_json(p).dump()), p);
  }
}

TEST(Serialize, Defaults) {
  Pair p = pair_from_string(R"({"c0": 2, "cinf": "1/2", "base": {"inf": "1/4", "t^2+1": -1}})");
  EXPECT_EQ(p.divisor, ToricAdelicDivisor(Q(2), Q("1/2")));
  EXPECT_EQ(p.base.at(ClosedPoint::infinity()), Q("1/4"));
  EXPECT_EQ(p.base.at(ClosedPoint::parse("t^2+1")), Q(-1));
}

TEST(Serialize, Errors) {
  auto code = [](const std::string& text) {
    try {
      pair_from_string(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code("{"), ErrorCode::kParse);
  EXPECT_EQ(code("[1]"), ErrorCode::kParse);
  EXPECT_EQ(code(R"({"c0": 1.5})"), ErrorCode::kParse);
  EXPECT_EQ(code(R"({"c0": 1, "potentials": {"inf": {"points": []}}})"), ErrorCode::kParse);
  EXPECT_EQ(code(R"({"c0": 1, "potentials": {"4": {"points": [["0","0"]], "slopes": ["0","1"]}}})"),
            ErrorCode::kInvalidPlace);
  EXPECT_EQ(code(R"({"c0": 1, "potentials": {"inf": {"points": [["0","0"]], "slopes": ["0","2"]}}})"),
            ErrorCode::kInvalidPotential);
  EXPECT_THROW(load_scene("/nonexistent/scene.json"), Error);
}

}  // namespace
}  // namespace adelic
