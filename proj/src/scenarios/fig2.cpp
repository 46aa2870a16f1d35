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
#include <sstream>

#include "reas/calibrate.hpp"
#include "reas/csv.hpp"
#include "reas/fit.hpp"
#include "reas/pool.hpp"
#include "reas/scenarios.hpp"
#include "reas/sim.hpp"

namespace reas {

namespace {

struct CalibrationTrial {
  std::vector<double> theory;
  std::vector<double> reas;
  std::vector<double> reas_std;
  std::vector<double> naive;
  std::vector<double> naive_std;
};

std::vector<RotationGate> fig2_gate_types() {
  return {RotationGate(PauliString::from_text("ZY"), M_PI / 8),
          RotationGate(PauliString::from_text("YZ"), -M_PI / 8),
          RotationGate(PauliString::from_text("XY"), -M_PI / 8)};
}

LayeredCircuit repeated_block_circuit(const std::vector<RotationGate>& gates,
                                      int repetitions) {
  LayeredCircuit c;
  c.n = gates.front().axis().n();
  for (int r = 0; r < repetitions; ++r)
    for (const auto& g : gates) c.append_block(Block{{Layer{{g}}}});
  return c;
}

InteractionNoiseModel make_fig2_model(const ExperimentConfig& cfg) {
  InteractionNoiseModel::Options opt;
  opt.n_sys = cfg.n_sys;
  opt.n_env = cfg.n_env;
  opt.gamma = cfg.gamma;
  opt.assign = InteractionNoiseModel::Options::Assign::kPerType;
  opt.bias_gate_axis = true;
  opt.bias_factor = cfg.bias_factor;
  opt.seed = derive_stream({cfg.seed, 0xF162});
  return InteractionNoiseModel(opt);
}

PauliString system_observable(const ExperimentConfig& cfg) {
  PauliString obs = PauliString::from_text(cfg.observable);
  if (obs.n() == cfg.n_sys) return obs;
  if (obs.n() == cfg.n_sys + cfg.n_env) {
    std::vector<int> sys(static_cast<size_t>(cfg.n_sys));
    for (int q = 0; q < cfg.n_sys; ++q) sys[static_cast<size_t>(q)] = q;
    for (int q = cfg.n_sys; q < obs.n(); ++q)
      if (obs.char_at(q) != 'I')
        throw std::invalid_argument("observable must act on system qubits only");
    return obs.restrict_to(sys);
  }
  throw std::invalid_argument("observable width mismatch");
}

}  // namespace

ScenarioResult run_fig2(const ExperimentConfig& cfg) {
  ScenarioResult result;
  std::ostringstream csv_out;
  CsvWriter csv(csv_out, {"record", "method", "trial", "gate", "b", "sample",
                          "value", "ideal"});

  std::vector<RotationGate> types = fig2_gate_types();
  Layer type_list;
  type_list.gates = types;

  // --- Calibration trials -------------------------------------------------
  auto trials = parallel_map<CalibrationTrial>(
      cfg.calibration_trials, cfg.workers, [&](int trial) {
        InteractionNoiseModel model = make_fig2_model(cfg);
        model.draw_type_noise(types, static_cast<uint64_t>(trial));
        CalibrationTrial t;
        auto reas = estimate_shift(type_list, cfg.n_sys, model, cfg.k_max,
                                   cfg.shots_per_k, CalibrationMode::kTwirled,
                                   derive_stream({cfg.seed, 0xCAFE,
                                                  static_cast<uint64_t>(trial)}));
        auto naive = estimate_shift(type_list, cfg.n_sys, model, cfg.k_max,
                                    cfg.shots_per_k, CalibrationMode::kNaive,
                                    derive_stream({cfg.seed, 0xDEAD,
                                                   static_cast<uint64_t>(trial)}));
        for (const auto& g : types) {
          const std::string key = g.type_key();
          t.theory.push_back(model.theory_shift(key));
          t.reas.push_back(reas.at(key).delta_theta);
          t.reas_std.push_back(reas.at(key).phase.std_dev);
          t.naive.push_back(naive.at(key).delta_theta);
          t.naive_std.push_back(naive.at(key).phase.std_dev);
        }
        return t;
      });

  for (int trial = 0; trial < cfg.calibration_trials; ++trial) {
    const CalibrationTrial& t = trials[static_cast<size_t>(trial)];
    for (size_t g = 0; g < types.size(); ++g) {
      std::string gate_name = types[g].type_key();
      csv.row({std::string("calibration"), std::string("theory"),
               int64_t{trial}, gate_name, int64_t{0}, int64_t{0}, t.theory[g],
               0.0});
      csv.row({std::string("calibration"), std::string("reas"), int64_t{trial},
               gate_name, int64_t{0}, int64_t{0}, t.reas[g], t.theory[g]});
      csv.row({std::string("calibration"), std::string("naive"), int64_t{trial},
               gate_name, int64_t{0}, int64_t{0}, t.naive[g], t.theory[g]});
    }
  }

  // --- Depth scaling with trial-0 noise and corrections --------------------
  InteractionNoiseModel model = make_fig2_model(cfg);
  model.draw_type_noise(types, 0);
  std::map<std::string, double> corrections;
  for (size_t g = 0; g < types.size(); ++g)
    corrections[types[g].type_key()] = trials[0].reas[g];

  PauliString obs = system_observable(cfg);
  StateVector init = StateVector::zero_state(cfg.n_sys, cfg.n_env);

  struct BResult {
    double ideal = 0;
    std::vector<double> reas_values;
    double original = 0;
  };
  int num_b = static_cast<int>(cfg.b_values.size());
  auto b_results = parallel_map<BResult>(num_b, cfg.workers, [&](int bi) {
    int reps = static_cast<int>(std::llround(cfg.b_values[static_cast<size_t>(bi)]));
    LayeredCircuit base = repeated_block_circuit(types, reps);
    BResult r;
    r.ideal = expectation(run_ideal(base, init), obs);
    r.original =
        expectation(run_shot(undressed(base), model, init,
                             derive_stream({0x0121, static_cast<uint64_t>(bi)})),
                    obs);
    for (int sample = 0; sample < cfg.samples; ++sample) {
      Philox rng = make_stream(cfg.seed, {0xD2E5, static_cast<uint64_t>(bi),
                                          static_cast<uint64_t>(sample)});
      DressedCircuit d = apply_corrections(dress(base, rng), corrections);
      uint64_t sample_id = derive_stream(
          {static_cast<uint64_t>(bi), static_cast<uint64_t>(sample)});
      r.reas_values.push_back(expectation(run_shot(d, model, init, sample_id), obs));
    }
    return r;
  });

  std::vector<std::pair<double, double>> reas_points, original_points;
  for (int bi = 0; bi < num_b; ++bi) {
    double b = cfg.b_values[static_cast<size_t>(bi)];
    const BResult& r = b_results[static_cast<size_t>(bi)];
    std::vector<std::pair<double, double>> weighted;
    for (int s = 0; s < cfg.samples; ++s) {
      csv.row({std::string("depth-scaling"), std::string("reas"), int64_t{0},
               std::string(""), int64_t{static_cast<int64_t>(b)}, int64_t{s},
               r.reas_values[static_cast<size_t>(s)], r.ideal});
      weighted.push_back({1.0 / cfg.samples, r.reas_values[static_cast<size_t>(s)]});
    }
    csv.row({std::string("depth-scaling"), std::string("original"), int64_t{0},
             std::string(""), int64_t{static_cast<int64_t>(b)}, int64_t{0},
             r.original, r.ideal});
    reas_points.push_back({b, rms_error(r.ideal, weighted)});
    original_points.push_back({b, std::abs(r.ideal - r.original)});
  }

  ScalingFit reas_fit =
      fit_power_law(reas_points, {{5.0, cfg.b_values.back() + 1}});
  size_t knee = saturation_knee(original_points, 0.2);
  if (knee < 3) knee = 3;
  std::vector<std::pair<double, double>> pre_knee(
      original_points.begin(),
      original_points.begin() + static_cast<long>(std::min(knee, original_points.size())));
  ScalingFit original_fit = fit_power_law(pre_knee);

  // --- Summary -------------------------------------------------------------
  nlohmann::ordered_json j = summary_header(cfg);
  j["gamma"] = cfg.gamma;
  j["bias_factor"] = cfg.bias_factor;
  j["observable"] = cfg.observable;
  j["k_max"] = cfg.k_max;
  j["shots_per_k"] = cfg.shots_per_k;
  nlohmann::ordered_json calib = nlohmann::ordered_json::array();
  for (int trial = 0; trial < cfg.calibration_trials; ++trial) {
    const CalibrationTrial& t = trials[static_cast<size_t>(trial)];
    for (size_t g = 0; g < types.size(); ++g) {
      calib.push_back({{"trial", trial},
                       {"gate", types[g].type_key()},
                       {"theory", t.theory[g]},
                       {"reas", t.reas[g]},
                       {"reas_std", t.reas_std[g]},
                       {"naive", t.naive[g]},
                       {"naive_std", t.naive_std[g]}});
    }
  }
  j["calibration"] = calib;
  auto fit_json = [](const ScalingFit& f) {
    return nlohmann::ordered_json{{"exponent", f.exponent},
                                  {"intercept", f.intercept},
                                  {"r_squared", f.r_squared},
                                  {"window", {f.window_lo, f.window_hi}},
                                  {"points", f.points_used}};
  };
  j["reas_fit"] = fit_json(reas_fit);
  j["original_fit"] = fit_json(original_fit);
  j["original_knee_index"] = knee;
  nlohmann::ordered_json curves = nlohmann::ordered_json::array();
  for (size_t i = 0; i < reas_points.size(); ++i)
    curves.push_back({{"b", reas_points[i].first},
                      {"reas_rms", reas_points[i].second},
                      {"original_abs_error", original_points[i].second}});
  j["rms_curve"] = curves;

  // --- Checks ---------------------------------------------------------------
  if (cfg.check) {
    auto expect = [&](bool ok, const std::string& msg) {
      if (!ok) {
        result.checks_passed = false;
        result.check_messages.push_back(msg);
      }
    };
    expect(reas_fit.exponent >= 0.40 && reas_fit.exponent <= 0.60,
           "dressed RMS exponent outside [0.40, 0.60]: " +
               format_double(reas_fit.exponent));
    expect(original_fit.exponent >= 0.85,
           "undressed pre-saturation exponent below 0.85: " +
               format_double(original_fit.exponent));
    double worst = 0;
    int wins = 0;
    for (const auto& t : trials) {
      double reas_err = 0, naive_err = 0;
      for (size_t g = 0; g < t.theory.size(); ++g) {
        reas_err += std::abs(t.reas[g] - t.theory[g]);
        naive_err += std::abs(t.naive[g] - t.theory[g]);
        worst = std::max(worst, std::abs(t.reas[g] - t.theory[g]));
      }
      if (reas_err < naive_err) ++wins;
    }
    expect(worst < 1e-4, "calibration error above 1e-4 rad: " +
                             format_double(worst));
    if (cfg.calibration_trials >= 20) {
      // One-sided sign test at significance 0.05: with n = 20 trials the
      // critical count is 15 wins.
      int n = cfg.calibration_trials;
      int critical = (n == 20) ? 15 : (n * 3 + 3) / 4;
      expect(wins >= critical,
             "twirled calibration not significantly closer than naive: " +
                 std::to_string(wins) + "/" + std::to_string(n));
    }
    j["checks"] = {{"passed", result.checks_passed},
                   {"messages", result.check_messages}};
  }

  result.csv = csv_out.str();
  result.summary = std::move(j);
  return result;
}

}  // namespace reas
