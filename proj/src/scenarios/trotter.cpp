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

#include <cmath>
#include <set>
#include <sstream>

#include "reas/csv.hpp"
#include "reas/pool.hpp"
#include "reas/scenarios.hpp"
#include "reas/sim.hpp"

namespace reas {

namespace {

// Additive amplitude-miscalibration overrotation on every ZZ gate type:
// the executed angle becomes s*theta + eta*theta, independent of the
// rotation direction. Single-qubit gates stay clean.
CoherentNoiseModel make_overrotation_model(const LayeredCircuit& c, int n_sys,
                                           double eta) {
  CoherentNoiseModel model(n_sys, 0);
  std::set<std::string> seen;
  const double kEps = 0.25;  // tan(eta * theta)/kEps stays within unit norm
  for (const auto& block : c.blocks)
    for (const auto& layer : block.layers)
      for (const auto& g : layer.gates) {
        if (g.axis().weight() != 2) continue;
        if (!seen.insert(g.type_key()).second) continue;
        double delta = eta * g.theta();
        double abar = -std::tan(delta) / kEps;
        model.set_type_error(g.type_key(),
                             CoherentError::overrotation(g.axis(), kEps, abar, 0));
      }
  return model;
}

}  // namespace

ScenarioResult run_trotter(const ExperimentConfig& cfg) {
  ScenarioResult result;
  std::ostringstream csv_out;
  CsvWriter csv(csv_out, {"method", "steps", "qubit", "draw", "expectation"});

  int n = cfg.trotter_sites;
  Philox angle_rng = make_stream(cfg.seed, {0x7707});
  std::vector<double> zz_angles(static_cast<size_t>(n - 1));
  for (auto& a : zz_angles) a = angle_rng.uniform(0.1, 0.9) * M_PI / 2;
  double x_angle = cfg.x_angle > 0 ? cfg.x_angle : 0.1 * M_PI;

  StateVector init = StateVector::zero_state(n, 0);

  struct StepResult {
    std::vector<double> original;               // per qubit
    std::vector<std::vector<double>> dressed;   // per draw, per qubit
  };
  int num_steps = static_cast<int>(cfg.trotter_steps.size());
  auto step_results = parallel_map<StepResult>(num_steps, cfg.workers, [&](int si) {
    int steps = cfg.trotter_steps[static_cast<size_t>(si)];
    LayeredCircuit circuit =
        compute_uncompute(build_trotter_ising(n, steps, zz_angles, x_angle));
    CoherentNoiseModel model =
        make_overrotation_model(circuit, n, cfg.overrotation);
    StepResult r;
    StateVector orig = run_shot(undressed(circuit), model, init, 0);
    for (int q = 0; q < n; ++q)
      r.original.push_back(expectation(orig, PauliString::single(n, q, 'Z')));
    for (int draw = 0; draw < cfg.trotter_draws; ++draw) {
      Philox rng = make_stream(cfg.seed, {0x7D0, static_cast<uint64_t>(si),
                                          static_cast<uint64_t>(draw)});
      DressedCircuit d = dress(circuit, rng);
      StateVector out = run_shot(d, model, init, static_cast<uint64_t>(draw));
      std::vector<double> per_qubit;
      for (int q = 0; q < n; ++q)
        per_qubit.push_back(expectation(out, PauliString::single(n, q, 'Z')));
      r.dressed.push_back(std::move(per_qubit));
    }
    return r;
  });

  // Ideal compute-uncompute expectation of every weight-1 Z is exactly 1.
  nlohmann::ordered_json curve = nlohmann::ordered_json::array();
  std::vector<double> mean_rms_original(static_cast<size_t>(num_steps));
  std::vector<double> mean_rms_dressed(static_cast<size_t>(num_steps));
  for (int si = 0; si < num_steps; ++si) {
    int steps = cfg.trotter_steps[static_cast<size_t>(si)];
    const StepResult& r = step_results[static_cast<size_t>(si)];
    double acc_orig = 0, acc_dressed = 0;
    for (int q = 0; q < n; ++q) {
      csv.row({std::string("original"), int64_t{steps}, int64_t{q}, int64_t{0},
               r.original[static_cast<size_t>(q)]});
      acc_orig += std::abs(1.0 - r.original[static_cast<size_t>(q)]);
      std::vector<std::pair<double, double>> weighted;
      for (int draw = 0; draw < cfg.trotter_draws; ++draw) {
        double v = r.dressed[static_cast<size_t>(draw)][static_cast<size_t>(q)];
        csv.row({std::string("reas"), int64_t{steps}, int64_t{q}, int64_t{draw},
                 v});
        weighted.push_back({1.0 / cfg.trotter_draws, v});
      }
      acc_dressed += rms_error(1.0, weighted);
    }
    mean_rms_original[static_cast<size_t>(si)] = acc_orig / n;
    mean_rms_dressed[static_cast<size_t>(si)] = acc_dressed / n;
    curve.push_back({{"steps", steps},
                     {"original_mean_rms", acc_orig / n},
                     {"reas_mean_rms", acc_dressed / n}});
  }

  nlohmann::ordered_json j = summary_header(cfg);
  j["sites"] = n;
  j["draws"] = cfg.trotter_draws;
  j["overrotation"] = cfg.overrotation;
  j["x_angle"] = x_angle;
  j["zz_angles"] = zz_angles;
  j["merge_inserted"] = cfg.merge_inserted;
  if (cfg.merge_inserted)
    j["merge_note"] =
        "inserted Pauli gates carry no noise in this scenario, so merging "
        "them into neighboring single-qubit gates leaves every realization "
        "unchanged; recorded for provenance only";
  j["curve"] = curve;

  if (cfg.check) {
    auto expect = [&](bool ok, const std::string& msg) {
      if (!ok) {
        result.checks_passed = false;
        result.check_messages.push_back(msg);
      }
    };
    for (int si = 0; si < num_steps; ++si) {
      if (cfg.trotter_steps[static_cast<size_t>(si)] < 4) continue;
      expect(mean_rms_dressed[static_cast<size_t>(si)] <=
                 mean_rms_original[static_cast<size_t>(si)],
             "dressed rms above undressed at steps=" +
                 std::to_string(cfg.trotter_steps[static_cast<size_t>(si)]));
    }
    j["checks"] = {{"passed", result.checks_passed},
                   {"messages", result.check_messages}};
  }

  result.csv = csv_out.str();
  result.summary = std::move(j);
  return result;
}

}  // namespace reas
