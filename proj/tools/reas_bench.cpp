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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "reas/calibrate.hpp"
#include "reas/csv.hpp"
#include "reas/fit.hpp"
#include "reas/scenarios.hpp"

namespace fs = std::filesystem;
using namespace reas;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitRuntimeError = 2;
constexpr int kExitCheckFailure = 3;

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config " + path);
  return load_experiment_config(in);
}

int cmd_run(const std::string& config_path, uint64_t seed_override,
            bool has_seed, bool full, const std::string& out_override,
            bool check, int workers, bool merge_inserted) {
  ExperimentConfig cfg = load_config_file(config_path);
  if (has_seed) cfg.seed = seed_override;
  if (full) cfg.full = true;
  if (!out_override.empty()) cfg.out_dir = out_override;
  if (check) cfg.check = true;
  if (workers > 0) cfg.workers = workers;
  if (merge_inserted) cfg.merge_inserted = true;
  if (cfg.full) {
    // Re-apply scenario defaults that depend on the flag.
    std::ifstream in(config_path);
    std::stringstream patched;
    patched << in.rdbuf() << "\n[run]\nfull = true\n";
    cfg = load_experiment_config(patched);
    if (has_seed) cfg.seed = seed_override;
    if (!out_override.empty()) cfg.out_dir = out_override;
    if (check) cfg.check = true;
    if (workers > 0) cfg.workers = workers;
    if (merge_inserted) cfg.merge_inserted = true;
  }

  ScenarioResult result = run_scenario(cfg);

  fs::create_directories(cfg.out_dir);
  fs::path csv_path = fs::path(cfg.out_dir) / (cfg.scenario + ".csv");
  fs::path json_path = fs::path(cfg.out_dir) / (cfg.scenario + ".json");
  std::ofstream(csv_path) << result.csv;
  std::ofstream(json_path) << result.summary.dump(2) << "\n";
  std::cout << "wrote " << csv_path.string() << "\n";
  std::cout << "wrote " << json_path.string() << "\n";
  if (cfg.check) {
    for (const auto& msg : result.check_messages)
      std::cerr << "check failed: " << msg << "\n";
    if (!result.checks_passed) return kExitCheckFailure;
    std::cout << "all checks passed\n";
  }
  return kExitOk;
}

int cmd_fit(const std::string& csv_path, const std::string& xcol,
            const std::string& ycol, const std::vector<double>& window) {
  std::ifstream in(csv_path);
  if (!in) throw std::invalid_argument("cannot open csv " + csv_path);
  CsvTable table = read_csv(in);
  int xi = table.column(xcol), yi = table.column(ycol);
  if (xi < 0 || yi < 0)
    throw std::invalid_argument("column not found in " + csv_path);
  std::vector<std::pair<double, double>> points;
  for (const auto& row : table.rows) {
    try {
      points.push_back({std::stod(row[static_cast<size_t>(xi)]),
                        std::stod(row[static_cast<size_t>(yi)])});
    } catch (...) {
      continue;  // non-numeric rows are skipped
    }
  }
  std::optional<std::pair<double, double>> w;
  if (window.size() == 2) w = {{window[0], window[1]}};
  ScalingFit fit = fit_power_law(points, w);
  nlohmann::ordered_json j{{"exponent", fit.exponent},
                           {"intercept", fit.intercept},
                           {"r_squared", fit.r_squared},
                           {"points", fit.points_used},
                           {"window", {fit.window_lo, fit.window_hi}}};
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_calibrate(const std::string& config_path) {
  ExperimentConfig cfg = load_config_file(config_path);
  if (cfg.scenario != "fig2-depth-scaling")
    throw std::invalid_argument("calibrate expects a fig2-depth-scaling config");

  std::vector<RotationGate> types = {
      RotationGate(PauliString::from_text("ZY"), M_PI / 8),
      RotationGate(PauliString::from_text("YZ"), -M_PI / 8),
      RotationGate(PauliString::from_text("XY"), -M_PI / 8)};
  InteractionNoiseModel::Options opt;
  opt.n_sys = cfg.n_sys;
  opt.n_env = cfg.n_env;
  opt.gamma = cfg.gamma;
  opt.assign = InteractionNoiseModel::Options::Assign::kPerType;
  opt.bias_gate_axis = true;
  opt.bias_factor = cfg.bias_factor;
  opt.seed = derive_stream({cfg.seed, 0xF162});
  InteractionNoiseModel model(opt);
  model.draw_type_noise(types, 0);

  Layer layer;
  layer.gates = types;
  auto shifts = estimate_shift(layer, cfg.n_sys, model, cfg.k_max,
                               cfg.shots_per_k, CalibrationMode::kTwirled,
                               derive_stream({cfg.seed, 0xCAFE, 0}));

  fs::create_directories(cfg.out_dir);
  fs::path out_path = fs::path(cfg.out_dir) / "calibration.csv";
  std::ofstream out(out_path);
  CsvWriter csv(out, {"pauli_text", "theta_nominal", "delta_theta_hat",
                      "std_dev", "k_max", "shots"});
  for (const auto& g : types) {
    const ShiftEstimate& se = shifts.at(g.type_key());
    csv.row({g.axis().text(), g.theta(), se.delta_theta, se.phase.std_dev,
             int64_t{cfg.k_max}, int64_t{cfg.shots_per_k}});
  }
  std::cout << "wrote " << out_path.string() << "\n";
  return kExitOk;
}

int cmd_validate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();

  LayeredCircuit circuit;
  std::istringstream probe(text);
  std::string first_word;
  probe >> first_word;
  if (first_word == "qubits" || first_word == "block" || first_word == "layer" ||
      first_word == "gate") {
    std::istringstream cs(text);
    circuit = read_circuit(cs);
  } else {
    // Config with an embedded circuit: repeated "[circuit] op = ..." lines.
    std::istringstream cs(text);
    ConfigMap cfg = ConfigMap::parse(cs);
    auto lines = cfg.occurrences("circuit.op");
    if (lines.empty())
      throw std::invalid_argument("no circuit found in " + path);
    std::string joined;
    for (const auto& l : lines) joined += l + "\n";
    std::istringstream es(joined);
    circuit = read_circuit(es);
  }
  auto warnings = validate(circuit);
  for (const auto& w : warnings) std::cout << "warning: " << w << "\n";
  std::cout << "ok: " << circuit.n << " qubits, " << circuit.blocks.size()
            << " blocks, " << circuit.total_gates() << " gates\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"layered-circuit error-suppression benchmark harness"};
  app.require_subcommand(1);

  std::string config_path, out_dir, csv_path, xcol, ycol, validate_path;
  uint64_t seed = 0;
  bool full = false, check = false, merge_inserted = false;
  int workers = 0;
  std::vector<double> window;

  auto* run = app.add_subcommand("run", "run a scenario config");
  run->add_option("config", config_path)->required();
  auto* seed_opt = run->add_option("--seed", seed, "master seed override");
  run->add_flag("--full", full, "paper-scale depth and sample counts");
  run->add_option("--out", out_dir, "output directory");
  run->add_flag("--check", check, "run acceptance checks (exit 3 on failure)");
  run->add_option("--workers", workers, "worker thread count");
  run->add_flag("--merge-inserted", merge_inserted,
                "record the merged-insertion variant in metadata");

  auto* fit = app.add_subcommand("fit", "power-law fit of csv columns");
  fit->add_option("csv", csv_path)->required();
  fit->add_option("--x", xcol)->required();
  fit->add_option("--y", ycol)->required();
  fit->add_option("--window", window, "x window: lo hi")->expected(2);

  auto* calibrate = app.add_subcommand("calibrate", "emit a calibration table");
  calibrate->add_option("config", config_path)->required();

  auto* validate_cmd = app.add_subcommand("validate", "validate a circuit file");
  validate_cmd->add_option("file", validate_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed())
      return cmd_run(config_path, seed, seed_opt->count() > 0, full, out_dir,
                     check, workers, merge_inserted);
    if (fit->parsed()) return cmd_fit(csv_path, xcol, ycol, window);
    if (calibrate->parsed()) return cmd_calibrate(config_path);
    if (validate_cmd->parsed()) return cmd_validate(validate_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
  return kExitOk;
}
