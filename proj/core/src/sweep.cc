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


#include "corrqaoa/sweep.h"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "corrqaoa/ansatz.h"
#include "corrqaoa/qaoa_runner.h"
#include "corrqaoa/sk_instance.h"
#include "corrqaoa/susceptibility.h"
#include "json.hpp"

namespace corrqaoa {
namespace {

using nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw std::invalid_argument(where + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw std::invalid_argument("unknown key '" + key + "' in " + where);
  }
}

template <class T>
void read(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

json optimizer_to_json(const OptimizerConfig& o) {
  return {{"restarts", o.restarts},
          {"hops", o.hops},
          {"hop_step", o.hop_step},
          {"hop_temperature", o.hop_temperature},
          {"init_halfwidth", o.init_halfwidth},
          {"local",
           {{"method", std::string(to_string(o.local.method))},
            {"tol", o.local.tol},
            {"max_iter", o.local.max_iter},
            {"gradient_step", o.local.gradient_step}}}};
}

OptimizerConfig optimizer_from_json(const json& j) {
  check_keys(j, {"restarts", "hops", "hop_step", "hop_temperature", "init_halfwidth", "local"}, "optimizer");
  OptimizerConfig o;
  read(j, "restarts", o.restarts);
  read(j, "hops", o.hops);
  read(j, "hop_step", o.hop_step);
  read(j, "hop_temperature", o.hop_temperature);
  read(j, "init_halfwidth", o.init_halfwidth);
  if (j.contains("local")) {
    const json& l = j.at("local");
    check_keys(l, {"method", "tol", "max_iter", "gradient_step"}, "optimizer.local");
    if (l.contains("method")) o.local.method = parse_local_method(l.at("method").get<std::string>());
    read(l, "tol", o.local.tol);
    read(l, "max_iter", o.local.max_iter);
    read(l, "gradient_step", o.local.gradient_step);
  }
  return o;
}

json config_to_json(const SweepConfig& c) {
  json models = json::array();
  for (NoiseMode m : c.models) models.push_back(std::string(to_string(m)));
  return {{"instances", c.instances},
          {"n", c.n},
          {"r", c.r},
          {"models", models},
          {"p_values", c.p_values},
          {"kappa_values", c.kappa_values},
          {"error_op", c.error_op},
          {"schedule", std::string(to_string(c.schedule))},
          {"include_boundary_slot", c.include_boundary_slot},
          {"optimizer", optimizer_to_json(c.optimizer)},
          {"outputs", {{"csv", c.outputs.csv}, {"json", c.outputs.json}, {"plot", c.outputs.plot}}},
          {"seed", c.seed},
          {"workers", c.workers},
          {"record_wall_time", c.record_wall_time}};
}

SweepConfig config_from_json(const json& j) {
  check_keys(j,
             {"instances", "n", "r", "models", "p_values", "kappa_values", "error_op", "schedule",
              "include_boundary_slot", "optimizer", "outputs", "seed", "workers", "record_wall_time"},
             "sweep config");
  SweepConfig c;
  read(j, "instances", c.instances);
  read(j, "n", c.n);
  read(j, "r", c.r);
  if (j.contains("models")) {
    c.models.clear();
    for (const json& m : j.at("models")) c.models.push_back(parse_noise_mode(m.get<std::string>()));
  }
  read(j, "p_values", c.p_values);
  read(j, "kappa_values", c.kappa_values);
  read(j, "error_op", c.error_op);
  if (j.contains("schedule")) c.schedule = parse_schedule(j.at("schedule").get<std::string>());
  read(j, "include_boundary_slot", c.include_boundary_slot);
  if (j.contains("optimizer")) c.optimizer = optimizer_from_json(j.at("optimizer"));
  if (j.contains("outputs")) {
    const json& o = j.at("outputs");
    check_keys(o, {"csv", "json", "plot"}, "outputs");
    read(o, "csv", c.outputs.csv);
    read(o, "json", c.outputs.json);
    read(o, "plot", c.outputs.plot);
  }
  read(j, "seed", c.seed);
  read(j, "workers", c.workers);
  read(j, "record_wall_time", c.record_wall_time);
  return c;
}

json real_to_json(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json record_to_json(const ExperimentRecord& r) {
  json j = {{"instance", r.instance},
            {"model", std::string(to_string(r.model))},
            {"p", r.p},
            {"kappa", r.kappa},
            {"AR", real_to_json(r.ar)},
            {"AR0", real_to_json(r.ar0)},
            {"dAR", real_to_json(r.dar)},
            {"chi", real_to_json(r.chi)},
            {"AR_lin", real_to_json(r.ar_lin)},
            {"C_star", r.c_star},
            {"c_tilde", real_to_json(r.c_tilde)},
            {"best_betas", r.best_betas},
            {"best_gammas", r.best_gammas},
            {"seed", r.seed},
            {"restarts_converged", r.restarts_converged},
            {"wall_time", r.wall_time}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

// Runs fn(i) for i in [0, count) on `workers` threads; rethrows the first
// exception.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  auto loop = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), count);
  if (threads <= 1) {
    loop();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(loop);
  }
  if (failure) std::rethrow_exception(failure);
}

struct Point {
  std::size_t instance = 0;
  NoiseMode model = NoiseMode::kNone;
  double p = 0.0;
  double kappa = 0.0;
};

}  // namespace

Matrix2c error_operator(std::string_view name) {
  if (name == "X") return pauli_x();
  if (name == "Y") return pauli_y();
  if (name == "Z") return pauli_z();
  throw std::invalid_argument("unknown error operator '" + std::string(name) + "' (expected X, Y or Z)");
}

void SweepConfig::validate() const {
  if (instances.empty()) throw std::invalid_argument("sweep needs at least one instance");
  if (n < 2) throw std::invalid_argument("sweep needs n >= 2");
  if (r < 1) throw std::invalid_argument("sweep needs r >= 1");
  for (const std::string& text : instances) {
    if (parse_instance(text).num_qubits() != n) {
      throw std::invalid_argument("instance '" + text + "' is not an n = " + std::to_string(n) + " instance");
    }
  }
  if (models.empty() || p_values.empty() || kappa_values.empty()) {
    throw std::invalid_argument("models, p_values and kappa_values must be non-empty");
  }
  for (double p : p_values) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p outside [0, 1]");
  }
  for (double k : kappa_values) {
    if (!(k >= 0.0 && k <= 1.0)) throw std::invalid_argument("kappa outside [0, 1]");
  }
  error_operator(error_op);
  optimizer.validate();
  if (workers < 1) throw std::invalid_argument("need at least one worker");
}

SweepConfig parse_sweep_config(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad sweep config: ") + e.what());
  }
  try {
    return config_from_json(j);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad sweep config: ") + e.what());
  }
}

std::string to_json(const SweepConfig& config) { return config_to_json(config).dump(2); }

SweepConfig config_from_results_json(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad results file: ") + e.what());
  }
  if (j.is_object() && j.contains("config") && j.contains("records")) return config_from_json(j.at("config"));
  return config_from_json(j);
}

std::vector<ExperimentRecord> run_sweep(const SweepConfig& config, const SweepProgress& progress) {
  config.validate();
  const std::size_t ni = config.instances.size();
  std::vector<SkInstance> instances;
  std::vector<AnsatzCircuit> circuits;
  std::vector<int> c_stars;
  for (const std::string& text : config.instances) {
    instances.push_back(parse_instance(text));
    circuits.push_back(build_swap_network(instances.back(), config.r));
    c_stars.push_back(brute_force_optimum(instances.back()).c_star);
  }
  auto model_for = [&](NoiseMode mode, double p, double kappa) {
    NoiseModel m;
    m.mode = mode;
    m.p = p;
    m.kappa = kappa;
    m.error_op = error_operator(config.error_op);
    m.schedule = config.schedule;
    m.include_boundary_slot = config.include_boundary_slot;
    return m;
  };

  // Noiseless optimum per instance.
  std::vector<OptimizationResult> noiseless(ni);
  std::vector<std::uint64_t> noiseless_seed(ni);
  std::vector<double> noiseless_time(ni);
  parallel_for(ni, config.workers, [&](std::size_t i) {
    const auto t0 = std::chrono::steady_clock::now();
    OptimizerConfig opt = config.optimizer;
    opt.seed = noiseless_seed[i] = derive_seed(config.seed, i, 0);
    opt.workers = 1;
    noiseless[i] = optimize(NoisyLandscape(instances[i], circuits[i], NoiseModel::none()), opt);
    noiseless_time[i] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  });

  std::vector<Point> points;
  for (std::size_t i = 0; i < ni; ++i) {
    for (NoiseMode mode : config.models) {
      if (mode == NoiseMode::kNone) {
        points.push_back({i, mode, 0.0, 0.0});
        continue;
      }
      for (double p : config.p_values) {
        for (double kappa : config.kappa_values) points.push_back({i, mode, p, kappa});
      }
    }
  }

  // chi per (instance, model, kappa) at the noiseless optimum.
  std::map<std::tuple<std::size_t, NoiseMode, double>, double> chi;
  std::vector<std::tuple<std::size_t, NoiseMode, double>> chi_keys;
  for (const Point& pt : points) {
    if (pt.model != NoiseMode::kNone && !chi.count({pt.instance, pt.model, pt.kappa})) {
      chi[{pt.instance, pt.model, pt.kappa}] = kNaN;
      chi_keys.emplace_back(pt.instance, pt.model, pt.kappa);
    }
  }
  std::vector<double> chi_values(chi_keys.size(), kNaN);
  std::vector<std::string> chi_errors(chi_keys.size());
  parallel_for(chi_keys.size(), config.workers, [&](std::size_t k) {
    const auto& [i, mode, kappa] = chi_keys[k];
    try {
      chi_values[k] = chi_exact(instances[i], circuits[i], Params::from_flat(noiseless[i].best_x),
                                model_for(mode, 0.0, kappa))
                          .chi;
    } catch (const std::exception& e) {
      chi_errors[k] = e.what();
    }
  });
  std::map<std::tuple<std::size_t, NoiseMode, double>, std::string> chi_error;
  for (std::size_t k = 0; k < chi_keys.size(); ++k) {
    chi[chi_keys[k]] = chi_values[k];
    if (!chi_errors[k].empty()) chi_error[chi_keys[k]] = chi_errors[k];
  }

  std::vector<ExperimentRecord> records(points.size());
  std::atomic<std::size_t> done{0};
  std::mutex progress_mu;
  parallel_for(points.size(), config.workers, [&](std::size_t k) {
    const Point& pt = points[k];
    const auto t0 = std::chrono::steady_clock::now();
    ExperimentRecord& rec = records[k];
    rec.instance = config.instances[pt.instance];
    rec.model = pt.model;
    rec.p = pt.p;
    rec.kappa = pt.kappa;
    rec.c_star = c_stars[pt.instance];
    const OptimizationResult& clean = noiseless[pt.instance];
    const double ar_zero = clean.best_value / rec.c_star;
    try {
      if (pt.model == NoiseMode::kNone) {
        const Params best = Params::from_flat(clean.best_x);
        rec.ar = rec.ar0 = ar_zero;
        rec.dar = 0.0;
        rec.chi = 0.0;
        rec.ar_lin = ar_zero;
        rec.c_tilde = clean.best_value;
        rec.best_betas = best.betas;
        rec.best_gammas = best.gammas;
        rec.seed = noiseless_seed[pt.instance];
        rec.restarts_converged = clean.converged_count();
        rec.wall_time = noiseless_time[pt.instance];
      } else {
        OptimizerConfig opt = config.optimizer;
        opt.seed = rec.seed = derive_seed(config.seed, pt.instance, k + 1);
        opt.workers = 1;
        const NoiseModel model = model_for(pt.model, pt.p, pt.kappa);
        QaoaRun run;
        if (pt.p == 0.0) {
          // Same landscape as the noiseless one.
          const NoiseModel none = NoiseModel::none();
          run = run_qaoa(instances[pt.instance], circuits[pt.instance], none, opt, clean);
        } else {
          run = run_qaoa(instances[pt.instance], circuits[pt.instance], model, opt, clean);
        }
        rec.ar = run.metrics.ar;
        rec.ar0 = run.metrics.ar0;
        rec.dar = run.metrics.dar;
        rec.chi = chi.at({pt.instance, pt.model, pt.kappa});
        if (const auto it = chi_error.find({pt.instance, pt.model, pt.kappa}); it != chi_error.end()) {
          rec.error = "chi: " + it->second;
        }
        rec.ar_lin = linearized_ar(ar_zero, rec.chi, rec.c_star, pt.p);
        rec.c_tilde = run.noisy.best_value;
        rec.best_betas = run.noisy_params.betas;
        rec.best_gammas = run.noisy_params.gammas;
        rec.restarts_converged = run.noisy.converged_count();
        rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      }
    } catch (const std::exception& e) {
      rec.error = e.what();
      rec.ar = rec.ar0 = rec.dar = rec.chi = rec.ar_lin = rec.c_tilde = kNaN;
    }
    if (!config.record_wall_time) rec.wall_time = 0.0;
    if (progress) {
      std::lock_guard<std::mutex> lock(progress_mu);
      progress(rec, ++done, points.size());
    }
  });
  return records;
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv(const std::vector<ExperimentRecord>& records) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  auto join = [](const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + format_real(v[i]);
    return s;
  };
  for (const ExperimentRecord& r : records) {
    out << r.instance << ',' << to_string(r.model) << ',' << format_real(r.p) << ',' << format_real(r.kappa)
        << ',' << format_real(r.ar) << ',' << format_real(r.ar0) << ',' << format_real(r.dar) << ','
        << format_real(r.chi) << ',' << format_real(r.ar_lin) << ',' << r.c_star << ','
        << format_real(r.c_tilde) << ',' << join(r.best_betas) << ',' << join(r.best_gammas) << ','
        << r.seed << ',' << r.restarts_converged << ',' << format_real(r.wall_time) << '\n';
  }
  return out.str();
}

std::string to_json(const SweepConfig& config, const std::vector<ExperimentRecord>& records) {
  json j = {{"config", config_to_json(config)}, {"records", json::array()}};
  for (const ExperimentRecord& r : records) j["records"].push_back(record_to_json(r));
  return j.dump(2);
}

int default_workers(int fallback) {
  const char* env = std::getenv("CORRQAOA_WORKERS");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 4096) {
    throw std::invalid_argument(std::string("CORRQAOA_WORKERS must be a positive integer, got '") + env + "'");
  }
  return static_cast<int>(v);
}

}  // namespace corrqaoa
