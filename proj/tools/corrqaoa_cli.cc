// Copyright 2026 The corrqaoa Authors
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


// corrqaoa: sweeps, brute force, symmetry checks and susceptibilities.
// Exit codes: 0 success, 1 invalid input, 2 runtime failure (including a
// failed symmetry check).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "corrqaoa/ansatz.h"
#include "corrqaoa/noisy_executor.h"
#include "corrqaoa/qaoa_runner.h"
#include "corrqaoa/sk_instance.h"
#include "corrqaoa/susceptibility.h"
#include "corrqaoa/svg_plot.h"
#include "corrqaoa/sweep.h"
#include "corrqaoa/symmetry.h"

namespace {

using namespace corrqaoa;

// Input problems found after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

std::string bits_of(std::uint32_t index, int n) {
  std::string s;
  for (int q = 0; q < n; ++q) s += ((index >> (n - 1 - q)) & 1U) ? '1' : '0';
  return s;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stod(item, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty()) throw UsageError("bad number '" + item + "' in list");
  }
  return out;
}

NoiseModel make_model(const std::string& mode, double p, double kappa, const std::string& error,
                      const std::string& schedule, bool boundary) {
  NoiseModel m;
  m.mode = parse_noise_mode(mode);
  m.p = p;
  m.kappa = kappa;
  m.error_op = error_operator(error);
  m.schedule = parse_schedule(schedule);
  m.include_boundary_slot = boundary;
  m.validate();
  return m;
}

struct SweepArgs {
  std::string config;
  std::string csv, json, plot;
  int workers = 0;
  bool no_wall_time = false;
  bool quiet = false;
};

int run_sweep_cmd(const SweepArgs& a) {
  SweepConfig config = config_from_results_json(read_file(a.config));
  if (!a.csv.empty()) config.outputs.csv = a.csv;
  if (!a.json.empty()) config.outputs.json = a.json;
  if (!a.plot.empty()) config.outputs.plot = a.plot;
  if (a.workers > 0) {
    config.workers = a.workers;
  } else {
    config.workers = default_workers(config.workers);
  }
  if (a.no_wall_time) config.record_wall_time = false;
  config.validate();
  const auto records = run_sweep(config, [&](const ExperimentRecord& r, std::size_t done, std::size_t total) {
    if (a.quiet) return;
    std::fprintf(stderr, "[%zu/%zu] %s %s p=%s kappa=%s AR=%s%s\n", done, total, r.instance.c_str(),
                 std::string(to_string(r.model)).c_str(), format_real(r.p).c_str(), format_real(r.kappa).c_str(),
                 format_real(r.ar).c_str(), r.error.empty() ? "" : (" error: " + r.error).c_str());
  });
  const std::string csv = to_csv(records);
  if (config.outputs.csv.empty()) {
    std::cout << csv;
  } else {
    write_file(config.outputs.csv, csv);
  }
  if (!config.outputs.json.empty()) write_file(config.outputs.json, to_json(config, records));
  if (!config.outputs.plot.empty()) write_file(config.outputs.plot, render_svg(records));
  for (const auto& r : records) {
    if (!r.error.empty()) return 2;
  }
  return 0;
}

int run_brute_force(const std::string& text) {
  const SkInstance inst = parse_instance(text);
  const BruteForceResult bf = brute_force_optimum(inst);
  std::cout << "instance " << inst.to_string() << "\n";
  std::cout << "n " << inst.num_qubits() << "\n";
  std::cout << "C_star " << bf.c_star << "\n";
  std::cout << "minimizers " << bf.minimizers.size() << "\n";
  for (std::uint32_t z : bf.minimizers) std::cout << "  " << bits_of(z, inst.num_qubits()) << "\n";
  return 0;
}

struct SymmetryArgs {
  int n = 4;
  int r = 2;
  std::string instance;
  std::string noise = "none";
  double p = 0.1;
  double kappa = 0.5;
  std::string error = "Y";
  std::string schedule = "active-gates";
  bool boundary = false;
  int trials = 20;
  int max_word = 5;
  double tol = 1e-9;
  std::uint64_t seed = 1;
};

int run_symmetry(const SymmetryArgs& a) {
  if (a.trials < 0) throw UsageError("--trials must be >= 0");
  std::mt19937_64 rng(a.seed);
  const SkInstance inst = a.instance.empty() ? random_instance(a.n, rng) : parse_instance(a.instance);
  const NoiseModel model = make_model(a.noise, a.p, a.kappa, a.error, a.schedule, a.boundary);
  const NoisyLandscape landscape(inst, build_swap_network(inst, a.r), model);
  const LandscapeFn fn = [&](const Params& x) { return landscape.value(x); };
  auto draw = [&] {
    Params x = Params::zeros(a.r);
    std::uniform_real_distribution<double> angle(-3.14159, 3.14159);
    for (double& b : x.betas) b = angle(rng);
    for (double& g : x.gammas) g = angle(rng);
    return x;
  };
  std::cout << "instance " << inst.to_string() << "  noise " << to_string(model.mode) << "\n";
  std::printf("%-44s %-22s %s\n", "transformation", "residual", "result");
  int failures = 0;
  auto report = [&](const InvarianceReport& rep) {
    std::printf("%-44s %-22.6e %s\n", rep.label.c_str(), rep.residual, rep.pass ? "pass" : "FAIL");
    failures += rep.pass ? 0 : 1;
  };
  for (const SymmetryGenerator& g : all_generators(a.r)) report(check_invariance(fn, draw(), g, a.tol));
  for (int t = 0; t < a.trials; ++t) {
    const auto word = random_word(a.r, a.max_word, rng);
    report(check_invariance(fn, draw(), word, a.tol));
  }
  std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " checks failed") << "\n";
  return failures == 0 ? 0 : 2;
}

struct SusceptibilityArgs {
  std::string instance;
  int r = 3;
  std::string model = "temporal";
  double kappa = 0.0;
  std::string error = "Y";
  std::string schedule = "active-gates";
  bool boundary = false;
  std::string params;
  int restarts = 32;
  std::uint64_t seed = 0;
};

int run_susceptibility(const SusceptibilityArgs& a) {
  const SkInstance inst = parse_instance(a.instance);
  const AnsatzCircuit circuit = build_swap_network(inst, a.r);
  const NoiseModel model = make_model(a.model, 0.0, a.kappa, a.error, a.schedule, a.boundary);
  Params params;
  if (a.params.empty()) {
    OptimizerConfig opt;
    opt.restarts = a.restarts;
    opt.seed = a.seed;
    const OptimizationResult res = optimize(NoisyLandscape(inst, circuit, NoiseModel::none()), opt);
    params = Params::from_flat(res.best_x);
    std::cout << "noiseless optimum " << format_real(res.best_value) << "\n";
  } else {
    const std::vector<double> flat = parse_list(a.params);
    if (flat.size() != 2 * static_cast<std::size_t>(a.r)) throw UsageError("--params needs 2r values");
    params = Params::from_flat(flat);
  }
  const SusceptibilityReport rep = chi_exact(inst, circuit, params, model);
  const int c_star = brute_force_optimum(inst).c_star;
  std::cout << "chi " << format_real(rep.chi) << "\n";
  std::cout << "H0 " << format_real(rep.h0) << "\n";
  std::cout << "C_star " << c_star << "\n";
  std::cout << "dAR/dp " << format_real(rep.chi / c_star) << "\n";
  std::cout << "zero_coefficient " << format_real(rep.zero_coefficient) << "\n";
  std::printf("%-8s %-8s %-24s %-24s %s\n", "length", "count", "weight", "weighted_H", "mean_H");
  for (const ChainLengthTerm& t : rep.terms) {
    const double mean = t.weight != 0.0 ? t.weighted_energy / t.weight : 0.0;
    std::printf("%-8d %-8zu %-24s %-24s %s\n", t.length, t.count, format_real(t.weight).c_str(),
                format_real(t.weighted_energy).c_str(), t.weight != 0.0 ? format_real(mean).c_str() : "-");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact QAOA landscapes under correlated fluctuator noise"};
  app.require_subcommand(1);

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "Run an experiment grid from a JSON config (or results file)");
  s->add_option("--config", sweep.config, "Sweep config or earlier results JSON")->required();
  s->add_option("--csv", sweep.csv, "CSV output (stdout when neither config nor flag sets it)");
  s->add_option("--json", sweep.json, "JSON output with config and records");
  s->add_option("--plot", sweep.plot, "SVG plot of AR against p and kappa");
  s->add_option("--workers", sweep.workers, "Worker threads (default: CORRQAOA_WORKERS or config)");
  s->add_flag("--no-wall-time", sweep.no_wall_time, "Write 0 wall times for byte-identical reruns");
  s->add_flag("--quiet", sweep.quiet, "No progress lines");

  std::string bf_instance;
  auto* b = app.add_subcommand("brute-force", "Ground-state energy and minimizers of an instance");
  b->add_option("--instance", bf_instance, "'+'/'-' weights, row-major over pairs i<j")->required();

  SymmetryArgs sym;
  auto* y = app.add_subcommand("symmetry-check", "Check landscape invariance under the parameter symmetries");
  y->add_option("--n", sym.n, "Qubits of a random instance");
  y->add_option("--r", sym.r, "QAOA cycles");
  y->add_option("--instance", sym.instance, "Fixed instance instead of a random one");
  y->add_option("--noise", sym.noise, "none, temporal or spatial");
  y->add_option("--p", sym.p, "Excitation probability");
  y->add_option("--kappa", sym.kappa, "Correlation parameter");
  y->add_option("--error", sym.error, "Error operator X, Y or Z");
  y->add_option("--schedule", sym.schedule, "active-gates or all-slots");
  y->add_flag("--boundary", sym.boundary, "Add the t = 0 slot");
  y->add_option("--trials", sym.trials, "Random generator words");
  y->add_option("--max-word", sym.max_word, "Longest random word");
  y->add_option("--tol", sym.tol, "Residual tolerance");
  y->add_option("--seed", sym.seed, "Seed for instance, parameters and words");

  SusceptibilityArgs sus;
  auto* c = app.add_subcommand("susceptibility", "First-order noise response with per-length breakdown");
  c->add_option("--instance", sus.instance, "'+'/'-' weights")->required();
  c->add_option("--r", sus.r, "QAOA cycles");
  c->add_option("--model", sus.model, "temporal or spatial");
  c->add_option("--kappa", sus.kappa, "Correlation parameter");
  c->add_option("--error", sus.error, "Error operator X, Y or Z");
  c->add_option("--schedule", sus.schedule, "active-gates or all-slots");
  c->add_flag("--boundary", sus.boundary, "Add the t = 0 slot");
  c->add_option("--params", sus.params, "betas then gammas, comma separated (default: noiseless optimum)");
  c->add_option("--restarts", sus.restarts, "Restarts for the noiseless optimization");
  c->add_option("--seed", sus.seed, "Optimizer seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  try {
    if (*s) return run_sweep_cmd(sweep);
    if (*b) return run_brute_force(bf_instance);
    if (*y) return run_symmetry(sym);
    if (*c) return run_susceptibility(sus);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "runtime failure: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
