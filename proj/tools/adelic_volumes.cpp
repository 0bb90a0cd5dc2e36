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

// adelic-volumes: command line front end.
//
//   adelic-volumes avol scenes/e1.json
//   adelic-volumes derivative scenes/e1.json --direction scenes/o.json
//   adelic-volumes diskant scenes/e1.json scenes/e2.json
//   adelic-volumes oracle scenes/e1.json --m 1,2,4,64 --format csv
//   adelic-volumes suite diskant_random --count 200 --seed 7
//
// Exit status is 0 when every check passes, 1 when a check fails and 2 on
// invalid input.

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "adelic/harness.hpp"
#include "adelic/positivity.hpp"
#include "adelic/sections.hpp"
#include "adelic/serialize.hpp"

namespace {

using namespace adelic;

enum class Format { kJson, kCsv };

// CSV rows under a fixed header.
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print_csv(std::ostream& out) const {
    print_line(out, columns_);
    for (const auto& r : rows_) print_line(out, r);
  }

 private:
  static void print_line(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      bool quote = cells[i].find_first_of(",\"") != std::string::npos;
      if (!quote) {
        out << cells[i];
        continue;
      }
      out << '"';
      for (char c : cells[i]) out << (c == '"' ? "\"\"" : std::string(1, c));
      out << '"';
    }
    out << '\n';
  }

  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

std::string num(double v) {
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

std::string exact_string(const ExactReal& v) { return v.to_string(); }

Json quantity_json(const Quantity& q) {
  if (q.exact()) return q.exact()->to_string();
  return num(q.value());
}

void emit(Format f, const Json& j, const Table& t) {
  if (f == Format::kJson) {
    std::cout << j.dump(2) << '\n';
  } else {
    t.print_csv(std::cout);
  }
}

std::vector<long> parse_m_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    long m = std::stol(item);
    if (m <= 0) throw Error(ErrorCode::kInvalidArgument, "m must be positive");
    out.push_back(m);
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidArgument, "empty m list");
  return out;
}

int cmd_avol(Format f, const std::string& scene) {
  Pair p = load_scene(scene);
  ExactReal v = avol(p);
  Interval delta = shifted_polytope(p);
  bool big = is_big(p);
  Json j{{"scene", scene}, {"avol", exact_string(v)}, {"value", num(v.to_double())}, {"big", big},
         {"pseudo_effective", is_pseff(p)}};
  if (!delta.is_empty()) {
    j["polytope"] = Json::array({delta.lo().to_string(), delta.hi().to_string()});
    j["roof"] = to_json(global_roof(p));
  }
  Table t({"scene", "avol", "value", "big"});
  t.add({scene, exact_string(v), num(v.to_double()), big ? "true" : "false"});
  emit(f, j, t);
  return 0;
}

int cmd_zariski(Format f, const std::string& scene) {
  Pair p = load_scene(scene);
  ZariskiPart z = zariski_positive_part(p);
  ExactReal before = avol(p);
  ExactReal after = avol(Pair(z.positive));
  bool ok = before == after && is_nef(z.positive) && precedes(z.positive, p);
  Json j{{"scene", scene}, {"positive", to_json(z.positive)}, {"avol", exact_string(before)},
         {"avol_positive", exact_string(after)}, {"pass", ok}};
  Table t({"scene", "avol", "avol_positive", "pass"});
  t.add({scene, exact_string(before), exact_string(after), ok ? "true" : "false"});
  emit(f, j, t);
  return ok ? 0 : 1;
}

int cmd_derivative(Format f, const std::string& scene, const std::string& direction, const std::string& steps,
                   const std::string& dominating) {
  Pair p = load_scene(scene);
  Pair d = load_scene(direction);
  std::vector<Rational> hs = default_steps();
  if (!steps.empty()) {
    hs.clear();
    std::stringstream ss(steps);
    std::string item;
    while (std::getline(ss, item, ',')) hs.push_back(Rational::parse(item));
  }
  std::optional<ToricAdelicDivisor> a;
  if (!dominating.empty()) a = load_scene(dominating).divisor;
  DerivativeReport rep = check_differentiability(p, d.divisor, hs, a);
  Table t({"h", "forward", "backward", "central", "richardson"});
  Json rows = Json::array();
  for (const auto& row : rep.table) {
    t.add({row.h.to_string(), num(row.forward.value()), num(row.backward.value()), num(row.central.value()),
           num(row.richardson.value())});
    rows.push_back({{"h", row.h.to_string()},
                    {"forward", quantity_json(row.forward)},
                    {"backward", quantity_json(row.backward)},
                    {"central", quantity_json(row.central)},
                    {"richardson", quantity_json(row.richardson)}});
  }
  Json j{{"scene", scene},
         {"direction", direction},
         {"table", rows},
         {"right_derivative", exact_string(rep.right.value)},
         {"left_derivative", exact_string(rep.left.value)},
         {"one_sided_exact", rep.right.exact && rep.left.exact},
         {"analytic", exact_string(rep.analytic)},
         {"max_deviation", rep.max_deviation},
         {"exact_agreement", rep.exact_agreement},
         {"kink", rep.kink},
         {"quadratic_coefficient", rep.quadratic_coefficient},
         {"pass", rep.pass}};
  if (rep.siu_bound) j["siu_bound"] = *rep.siu_bound;
  emit(f, j, t);
  return rep.pass ? 0 : 1;
}

int cmd_diskant(Format f, const std::string& s1, const std::string& s2) {
  DiskantReport rep = diskant_report(load_scene(s1), load_scene(s2));
  Json slacks = Json::object();
  Table t({"case", "lhs", "rhs", "slack", "pass"});
  for (const auto& c : rep.cases) {
    slacks[c.name] = quantity_json(c.slack);
    t.add({c.name, c.lhs.to_string(), c.rhs.to_string(), c.slack.to_string(), c.pass ? "true" : "false"});
  }
  Json j{{"s", Json::array({quantity_json(rep.s0), quantity_json(rep.s1), quantity_json(rep.s2)})},
         {"r", rep.r.to_string()},
         {"R", rep.big_r.to_string()},
         {"slacks", slacks},
         {"pass", rep.pass()}};
  emit(f, j, t);
  return rep.pass() ? 0 : 1;
}

int cmd_oracle(Format f, const std::string& scene, const std::string& ms) {
  Pair p = load_scene(scene);
  ExactReal target = avol(p);
  double c = internal::oracle_constant(p);
  bool ok = true;
  Table t({"m", "log_count", "estimate", "analytic_avol", "error"});
  Json rows = Json::array();
  for (long m : parse_m_list(ms)) {
    RealInterval lc = box_log_count(p, m);
    RealInterval est = volume_estimate(p, m);
    double err = std::abs(est.midpoint() - target.to_double());
    bool within = err <= c / static_cast<double>(m);
    ok = ok && within;
    t.add({std::to_string(m), lc.to_string(20), est.to_string(20), num(target.to_double()), num(err)});
    rows.push_back({{"m", m},
                    {"log_count", lc.to_string(20)},
                    {"estimate", est.to_string(20)},
                    {"analytic_avol", exact_string(target)},
                    {"error", err},
                    {"bound", c / static_cast<double>(m)},
                    {"pass", within}});
  }
  emit(f, Json{{"scene", scene}, {"rows", rows}, {"pass", ok}}, t);
  return ok ? 0 : 1;
}

int cmd_okounkov(Format f, const std::string& scene, long m) {
  Pair p = load_scene(scene);
  OkounkovData data = analytic_okounkov(p);
  double logs = 0;
  for (const auto& [v, g] : p.divisor.potentials()) {
    if (!v.is_archimedean()) logs += std::log(static_cast<double>(v.prime()));
  }
  double bound = logs / static_cast<double>(m) + 1e-12;
  bool ok = data.volume * Rational(2) == avol(p);
  Table t({"w", "empirical", "analytic", "gap"});
  Json rows = Json::array();
  for (const auto& [w, tmax] : okounkov_sample(p, m).points) {
    double g = data.transform.eval(w).to_double();
    double gap = g - tmax.to_double();
    ok = ok && gap >= -1e-12 && gap <= bound;
    t.add({w.to_string(), num(tmax.to_double()), num(g), num(gap)});
    rows.push_back({{"w", w.to_string()}, {"empirical", tmax.to_string()}, {"analytic", num(g)}, {"gap", gap}});
  }
  Json j{{"scene", scene},
         {"body", Json::array({data.body.lo().to_string(), data.body.hi().to_string()})},
         {"transform", to_json(data.transform)},
         {"body_volume", exact_string(data.volume)},
         {"avol", exact_string(avol(p))},
         {"m", m},
         {"samples", rows},
         {"pass", ok}};
  emit(f, j, t);
  return ok ? 0 : 1;
}

int cmd_suite(Format f, const std::string& name, long count, std::uint64_t seed) {
  SuiteSummary s = run_suite(name, count, seed);
  Json j{{"suite", name}, {"count", s.count}, {"seed", s.seed}, {"passed", s.passed},
         {"worst_slack", s.worst_slack}, {"worst_index", s.worst_index}, {"pass", s.pass()}};
  if (s.first_failure) {
    j["failure"] = {{"index", s.first_failure_index},
                    {"detail", s.first_failure->detail},
                    {"instance", Json::parse(s.first_failure->instance)}};
  }
  Table t({"suite", "count", "seed", "passed", "worst_slack"});
  t.add({name, std::to_string(s.count), std::to_string(s.seed), std::to_string(s.passed), num(s.worst_slack)});
  emit(f, j, t);
  return s.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic volumes of toric adelic divisors on the projective line"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  std::string scene, scene2, direction, steps, dominating, ms = "1,2,4,16,64", name;
  long m = 64;
  long count = 200;
  std::uint64_t seed = 7;

  auto* avol_cmd = app.add_subcommand("avol", "Arithmetic volume of a scene");
  avol_cmd->add_option("scene", scene)->required();

  auto* zar = app.add_subcommand("zariski", "Zariski positive part");
  zar->add_option("scene", scene)->required();

  auto* der = app.add_subcommand("derivative", "Finite differences of the volume against 2 <P> . D'");
  der->add_option("scene", scene)->required();
  der->add_option("--direction", direction, "Scene whose divisor is the direction")->required();
  der->add_option("--h", steps, "Comma-separated steps, e.g. 1/16,1/1024");
  der->add_option("--dominating", dominating, "Nef scene for the quadratic bound");

  auto* dis = app.add_subcommand("diskant", "Diskant chain and Bonnesen inequality");
  dis->add_option("scene1", scene)->required();
  dis->add_option("scene2", scene2)->required();

  auto* ora = app.add_subcommand("oracle", "Section-count volume estimates");
  ora->add_option("scene", scene)->required();
  ora->add_option("--m", ms, "Comma-separated multiples");

  auto* oko = app.add_subcommand("okounkov", "Okounkov body and concave transform");
  oko->add_option("scene", scene)->required();
  oko->add_option("--m", m, "Multiple used for the empirical transform")->check(CLI::PositiveNumber);

  auto* sui = app.add_subcommand("suite", "Randomized property suite");
  sui->add_option("name", name)->required();
  sui->add_option("--count", count)->check(CLI::NonNegativeNumber);
  sui->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);
  Format f = format == "csv" ? Format::kCsv : Format::kJson;
  try {
    if (*avol_cmd) return cmd_avol(f, scene);
    if (*zar) return cmd_zariski(f, scene);
    if (*der) return cmd_derivative(f, scene, direction, steps, dominating);
    if (*dis) return cmd_diskant(f, scene, scene2);
    if (*ora) return cmd_oracle(f, scene, ms);
    if (*oko) return cmd_okounkov(f, scene, m);
    if (*sui) return cmd_suite(f, name, count, seed);
  } catch (const adelic::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
