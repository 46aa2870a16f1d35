// Copyright 2026 The reas-sim Authors
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

#include "doctest.h"
#include "reas/config.hpp"
#include "reas/csv.hpp"
#include "reas/fit.hpp"
#include "reas/pool.hpp"
#include "reas/scenarios.hpp"

#include <cmath>
#include <sstream>

using namespace reas;

TEST_CASE("power law fits") {
  std::vector<std::pair<double, double>> sqrt_curve, quad;
  for (double x : {1.0, 2.0, 5.0, 10.0, 20.0}) {
    sqrt_curve.push_back({x, std::sqrt(x)});
    quad.push_back({x, 3 * x * x});
  }
  ScalingFit f1 = fit_power_law(sqrt_curve);
  CHECK(f1.exponent == doctest::Approx(0.5));
  CHECK(f1.r_squared == doctest::Approx(1.0));
  ScalingFit f2 = fit_power_law(quad);
  CHECK(f2.exponent == doctest::Approx(2.0));
  CHECK(f2.intercept == doctest::Approx(std::log(3.0)));

  // Window filtering.
  ScalingFit f3 = fit_power_law(sqrt_curve, {{2.0, 20.0}});
  CHECK(f3.points_used == 4);

  CHECK_THROWS(fit_power_law({{1, 1}, {2, 2}}));
  CHECK_THROWS(fit_power_law({{1, 1}, {2, 0.0}, {3, 1}}));

  // Knee detection: slope collapses after the third point.
  std::vector<std::pair<double, double>> knee = {
      {1, 1}, {2, 2}, {4, 4}, {8, 4.1}, {16, 4.2}};
  CHECK(saturation_knee(knee, 0.2) == 3);
  CHECK(saturation_knee(quad, 0.2) == quad.size());
}

TEST_CASE("csv escaping and round trip") {
  std::ostringstream out;
  CsvWriter w(out, {"name", "value"});
  w.row({std::string("plain"), 1.5});
  w.row({std::string("with,comma"), 2.0});
  w.row({std::string("with\"quote"), 3.0});
  std::istringstream in(out.str());
  CsvTable t = read_csv(in);
  CHECK(t.header == std::vector<std::string>{"name", "value"});
  CHECK(t.rows.size() == 3);
  CHECK(t.rows[1][0] == "with,comma");
  CHECK(t.rows[2][0] == "with\"quote");
  CHECK(t.column("value") == 1);
  CHECK(t.column("missing") == -1);

  // Shortest-round-trip doubles parse back exactly.
  double v = 0.1234567890123456789;
  CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("config parsing") {
  std::istringstream in(R"(
scenario = fig3-gamma-scaling
seed = 99
[sweep]
gamma_values = 0.001 0.002 0.004
[run]
depth = 50
samples = 10
)");
  ExperimentConfig cfg = load_experiment_config(in);
  CHECK(cfg.scenario == "fig3-gamma-scaling");
  CHECK(cfg.seed == 99);
  CHECK(cfg.depth == 50);
  CHECK(cfg.samples == 10);
  CHECK(cfg.gamma_values == std::vector<double>{0.001, 0.002, 0.004});

  std::istringstream bad("scenario = no-such-thing\n");
  CHECK_THROWS(load_experiment_config(bad));

  std::istringstream bad2(
      "scenario = fig3-gamma-scaling\n[run]\nsamples = 1\n");
  CHECK_THROWS(load_experiment_config(bad2));

  // Hashing is stable and sensitive to values.
  std::istringstream a("x = 1\n"), b("x = 1\n"), c("x = 2\n");
  CHECK(config_hash(ConfigMap::parse(a)) == config_hash(ConfigMap::parse(b)));
  std::istringstream a2("x = 1\n");
  CHECK(config_hash(ConfigMap::parse(a2)) != config_hash(ConfigMap::parse(c)));
}

TEST_CASE("parallel map is deterministic and propagates errors") {
  auto square = [](int i) { return i * i; };
  auto r1 = parallel_map<int>(100, 1, square);
  auto r4 = parallel_map<int>(100, 4, square);
  CHECK(r1 == r4);
  CHECK(r1[7] == 49);

  CHECK_THROWS(parallel_map<int>(10, 4, [](int i) -> int {
    if (i == 5) throw std::runtime_error("boom");
    return i;
  }));
}

TEST_CASE("scenario replay is byte identical across worker counts") {
  std::istringstream in(R"(
scenario = fig3-gamma-scaling
seed = 31415
[sweep]
gamma_values = 0.0005 0.001 0.002
[run]
depth = 16
samples = 6
)");
  ExperimentConfig cfg = load_experiment_config(in);
  cfg.workers = 1;
  ScenarioResult r1 = run_scenario(cfg);
  cfg.workers = 4;
  ScenarioResult r4 = run_scenario(cfg);
  CHECK(r1.csv == r4.csv);
  CHECK(r1.summary.dump() == r4.summary.dump());
  CHECK(r1.csv.find("original") != std::string::npos);
}

TEST_CASE("summary header is reproducible") {
  std::istringstream in("scenario = trotter-ising\nseed = 5\n");
  ExperimentConfig cfg = load_experiment_config(in);
  auto h1 = summary_header(cfg);
  auto h2 = summary_header(cfg);
  CHECK(h1.dump() == h2.dump());
  CHECK(h1["seed"] == 5);
  CHECK(h1["version"] == kVersion);
}
