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

// JSON scene files.
//
//   {"c0": "1", "cinf": "0",
//    "potentials": {"inf": {"points": [["1", "1"]], "slopes": ["0", "1"]},
//                   "2":   {...}},
//    "base": {"0": "1/2"}}
//
// Rationals are strings ("3/4") or integers. Finite-place potentials are in
// units of log p and in the coordinate w = ord_p. Missing potentials are
// canonical.

#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "adelic/adelic.hpp"

namespace adelic {

using Json = nlohmann::json;

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw Error(ErrorCode::kParse, "expected a rational, got " + j.dump());
}

inline Json to_json(const Rational& q) { return q.to_string(); }

inline Json to_json(const LinePA& f) {
  Json pts = Json::array();
  for (const auto& p : f.points()) pts.push_back(Json::array({to_json(p.x), to_json(p.y)}));
  return Json{{"points", pts}, {"slopes", Json::array({to_json(f.left_slope()), to_json(f.right_slope())})}};
}

inline LinePA line_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("slopes")) {
    throw Error(ErrorCode::kParse, "potential needs \"points\" and \"slopes\"");
  }
  std::vector<LinePA::Point> pts;
  for (const auto& p : j.at("points")) {
    if (!p.is_array() || p.size() != 2) throw Error(ErrorCode::kParse, "point must be [x, y]");
    pts.push_back({rational_from_json(p[0]), rational_from_json(p[1])});
  }
  const Json& s = j.at("slopes");
  if (!s.is_array() || s.size() != 2) throw Error(ErrorCode::kParse, "slopes must be [left, right]");
  return LinePA(std::move(pts), rational_from_json(s[0]), rational_from_json(s[1]));
}

template <class V>
Json to_json(const ConcavePA<V>& f) {
  Json pts = Json::array();
  for (const auto& p : f.points()) pts.push_back(Json::array({to_json(p.x), p.y.to_string()}));
  return Json{{"domain", Json::array({to_json(f.domain().lo()), to_json(f.domain().hi())})}, {"points", pts}};
}

inline Json to_json(const Pair& p) {
  Json pots = Json::object();
  for (const auto& [v, g] : p.divisor.potentials()) pots[v.to_string()] = to_json(g);
  Json base = Json::object();
  for (const auto& [pt, a] : p.base.entries()) base[pt.to_string()] = to_json(a);
  Json out{{"c0", to_json(p.divisor.c0())}, {"cinf", to_json(p.divisor.cinf())}, {"potentials", pots}};
  if (!base.empty()) out["base"] = base;
  return out;
}

inline Json to_json(const ToricAdelicDivisor& d) { return to_json(Pair(d)); }

inline Pair pair_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, "scene must be a JSON object");
  ToricAdelicDivisor d(rational_from_json(j.value("c0", Json(0))), rational_from_json(j.value("cinf", Json(0))));
  if (j.contains("potentials")) {
    for (const auto& [key, g] : j.at("potentials").items()) d = d.with_potential(Place::parse(key), line_from_json(g));
  }
  BaseCondition base;
  if (j.contains("base")) {
    for (const auto& [key, a] : j.at("base").items()) base.add(ClosedPoint::parse(key), rational_from_json(a));
  }
  return Pair(std::move(d), std::move(base));
}

inline Pair pair_from_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  return pair_from_json(j);
}

inline Pair load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return pair_from_string(ss.str());
}

}  // namespace adelic
