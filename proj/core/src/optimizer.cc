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


#include "corrqaoa/optimizer.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "corrqaoa/fluctuator.h"

namespace corrqaoa {
namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double max_abs(std::span<const double> a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Point {
  std::vector<double> x;
  double f = 0.0;
};

LocalResult nelder_mead(const Objective& objective, std::vector<double> x0, const LocalConfig& config) {
  const std::size_t d = x0.size();
  std::vector<Point> simplex(d + 1);
  simplex[0] = {x0, objective.value(x0)};
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<double> x = x0;
    x[i] = x[i] != 0.0 ? 1.05 * x[i] : 0.00025;
    simplex[i + 1] = {x, objective.value(x)};
  }
  // Adaptive coefficients for the dimension.
  const double dd = static_cast<double>(d);
  const double rho = 1.0, chi = 1.0 + 2.0 / dd, psi = 0.75 - 1.0 / (2.0 * dd), sigma = 1.0 - 1.0 / dd;
  LocalResult out;
  auto by_value = [](const Point& a, const Point& b) { return a.f < b.f; };
  const int max_iter = config.max_iter * static_cast<int>(d);
  for (out.iterations = 0; out.iterations < max_iter; ++out.iterations) {
    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    const double spread = simplex.back().f - simplex.front().f;
    if (spread <= config.tol * (1.0 + std::abs(simplex.front().f))) {
      out.converged = true;
      break;
    }
    std::vector<double> centroid(d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) centroid[j] += simplex[i].x[j] / dd;
    }
    auto along = [&](double t) {
      std::vector<double> x(d);
      for (std::size_t j = 0; j < d; ++j) x[j] = centroid[j] + t * (simplex[d].x[j] - centroid[j]);
      return Point{x, objective.value(x)};
    };
    Point xr = along(-rho);
    if (xr.f < simplex[0].f) {
      Point xe = along(-rho * chi);
      simplex[d] = xe.f < xr.f ? xe : xr;
      continue;
    }
    if (xr.f < simplex[d - 1].f) {
      simplex[d] = xr;
      continue;
    }
    Point xc = xr.f < simplex[d].f ? along(-rho * psi) : along(psi);
    if (xc.f < std::min(xr.f, simplex[d].f)) {
      simplex[d] = xc;
      continue;
    }
    for (std::size_t i = 1; i <= d; ++i) {
      for (std::size_t j = 0; j < d; ++j) simplex[i].x[j] = simplex[0].x[j] + sigma * (simplex[i].x[j] - simplex[0].x[j]);
      simplex[i].f = objective.value(simplex[i].x);
    }
  }
  std::stable_sort(simplex.begin(), simplex.end(), by_value);
  out.x = simplex[0].x;
  out.value = simplex[0].f;
  return out;
}

LocalResult bfgs(const Objective& objective, std::vector<double> x, const LocalConfig& config) {
  const std::size_t d = x.size();
  LocalResult out;
  double f = objective.value(x);
  std::vector<double> g = objective.gradient(x, config.gradient_step);
  // Inverse Hessian approximation, row-major.
  std::vector<double> h(d * d, 0.0);
  auto reset = [&] {
    std::fill(h.begin(), h.end(), 0.0);
    for (std::size_t i = 0; i < d; ++i) h[i * d + i] = 1.0;
  };
  reset();
  bool fresh = true;
  std::vector<double> dir(d), xn(d), s(d), y(d), hy(d);
  for (out.iterations = 0; out.iterations < config.max_iter; ++out.iterations) {
    if (!std::isfinite(f)) break;
    if (max_abs(g) <= config.tol) {
      out.converged = true;
      break;
    }
    for (std::size_t i = 0; i < d; ++i) {
      dir[i] = 0.0;
      for (std::size_t j = 0; j < d; ++j) dir[i] -= h[i * d + j] * g[j];
    }
    double slope = dot(g, dir);
    if (!(slope < 0.0)) {
      reset();
      fresh = true;
      for (std::size_t i = 0; i < d; ++i) dir[i] = -g[i];
      slope = dot(g, dir);
    }
    // Backtracking with quadratic interpolation on the Armijo condition.
    double alpha = fresh ? std::min(1.0, 1.0 / max_abs(g)) : 1.0;
    double fn = 0.0;
    bool found = false;
    for (int tries = 0; tries < 40; ++tries) {
      for (std::size_t i = 0; i < d; ++i) xn[i] = x[i] + alpha * dir[i];
      fn = objective.value(xn);
      if (std::isfinite(fn) && fn <= f + 1e-4 * alpha * slope) {
        found = true;
        break;
      }
      double next = 0.5 * alpha;
      if (std::isfinite(fn)) {
        const double denom = 2.0 * (fn - f - slope * alpha);
        if (denom > 0.0) next = -slope * alpha * alpha / denom;
      }
      alpha = std::clamp(next, 0.1 * alpha, 0.5 * alpha);
    }
    if (!found) {
      if (!fresh) {
        reset();
        fresh = true;
        continue;
      }
      break;
    }
    std::vector<double> gn = objective.gradient(xn, config.gradient_step);
    for (std::size_t i = 0; i < d; ++i) {
      s[i] = xn[i] - x[i];
      y[i] = gn[i] - g[i];
    }
    const double decrease = f - fn;
    const double scale = std::max({std::abs(f), std::abs(fn), 1.0});
    x = xn;
    f = fn;
    g = std::move(gn);
    if (decrease <= config.tol * scale) {
      out.converged = true;
      ++out.iterations;
      break;
    }
    const double sy = dot(s, y);
    if (sy > 1e-12 * std::sqrt(dot(s, s) * dot(y, y))) {
      if (fresh) {
        const double gamma = sy / dot(y, y);
        for (double& v : h) v *= gamma;
      }
      // H <- (I - rho s y^T) H (I - rho y s^T) + rho s s^T
      const double rho = 1.0 / sy;
      for (std::size_t i = 0; i < d; ++i) {
        hy[i] = 0.0;
        for (std::size_t j = 0; j < d; ++j) hy[i] += h[i * d + j] * y[j];
      }
      const double yhy = dot(y, hy);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          h[i * d + j] += rho * ((1.0 + rho * yhy) * s[i] * s[j] - hy[i] * s[j] - s[i] * hy[j]);
        }
      }
      fresh = false;
    }
  }
  out.x = std::move(x);
  out.value = f;
  return out;
}

RestartRecord run_restart(const Objective& objective, const OptimizerConfig& config, int restart) {
  const std::size_t d = objective.dimension();
  RestartRecord rec;
  rec.seed = derive_seed(config.seed, static_cast<std::uint64_t>(restart), 0);
  std::mt19937_64 rng(rec.seed);
  std::vector<double> x0(d);
  for (double& v : x0) v = config.init_halfwidth * (2.0 * uniform01(rng) - 1.0);
  LocalResult current = local_minimize(objective, x0, config.local);
  rec.converged = current.converged;
  rec.minima.push_back(current.value);
  LocalResult best = current;
  for (int hop = 1; hop <= config.hops; ++hop) {
    std::mt19937_64 hop_rng(derive_seed(config.seed, static_cast<std::uint64_t>(restart),
                                        static_cast<std::uint64_t>(hop)));
    std::vector<double> trial = current.x;
    for (double& v : trial) v += config.hop_step * (2.0 * uniform01(hop_rng) - 1.0);
    LocalResult next = local_minimize(objective, trial, config.local);
    rec.converged = rec.converged && next.converged;
    rec.minima.push_back(next.value);
    bool accept = next.value < current.value;
    if (!accept) {
      const double u = uniform01(hop_rng);
      accept = u < std::exp(-(next.value - current.value) / config.hop_temperature);
    }
    rec.accepted.push_back(accept);
    if (next.value < best.value) best = next;
    if (accept) current = std::move(next);
  }
  rec.final_value = best.value;
  rec.final_x = std::move(best.x);
  return rec;
}

}  // namespace

std::vector<double> Objective::gradient(std::span<const double> x, double step) const {
  std::vector<double> g(x.size());
  std::vector<double> probe(x.begin(), x.end());
  for (std::size_t i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + step;
    const double up = value(probe);
    probe[i] = x[i] - step;
    const double down = value(probe);
    probe[i] = x[i];
    g[i] = (up - down) / (2.0 * step);
  }
  return g;
}

std::string_view to_string(LocalMethod method) {
  return method == LocalMethod::kBfgs ? "bfgs" : "nelder-mead";
}

LocalMethod parse_local_method(std::string_view text) {
  if (text == "bfgs") return LocalMethod::kBfgs;
  if (text == "nelder-mead") return LocalMethod::kNelderMead;
  throw std::invalid_argument("unknown local method '" + std::string(text) + "'");
}

LocalResult local_minimize(const Objective& objective, std::vector<double> x0, const LocalConfig& config) {
  if (x0.size() != objective.dimension()) throw std::invalid_argument("start point has the wrong dimension");
  if (!(config.tol > 0.0) || config.max_iter < 1 || !(config.gradient_step > 0.0)) {
    throw std::invalid_argument("local minimizer needs tol > 0, max_iter >= 1 and gradient_step > 0");
  }
  if (config.method == LocalMethod::kNelderMead) return nelder_mead(objective, std::move(x0), config);
  LocalResult r = bfgs(objective, std::move(x0), config);
  if (r.converged) return r;
  LocalResult fallback = nelder_mead(objective, r.x, config);
  fallback.used_fallback = true;
  fallback.iterations += r.iterations;
  if (fallback.value > r.value) {
    fallback.x = r.x;
    fallback.value = r.value;
  }
  return fallback;
}

void OptimizerConfig::validate() const {
  if (restarts < 1 || hops < 0) throw std::invalid_argument("need restarts >= 1 and hops >= 0");
  if (!(hop_step > 0.0) || !(init_halfwidth > 0.0)) throw std::invalid_argument("widths must be positive");
  if (!(hop_temperature > 0.0)) throw std::invalid_argument("hop temperature must be positive");
  if (workers < 1) throw std::invalid_argument("need at least one worker");
  if (!(local.tol > 0.0) || local.max_iter < 1 || !(local.gradient_step > 0.0)) {
    throw std::invalid_argument("local minimizer needs tol > 0, max_iter >= 1 and gradient_step > 0");
  }
}

int OptimizationResult::converged_count() const {
  return static_cast<int>(std::count_if(per_restart.begin(), per_restart.end(),
                                        [](const RestartRecord& r) { return r.converged; }));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t restart, std::uint64_t hop) {
  std::uint64_t state = seed;
  std::uint64_t z = splitmix64(state);
  state = z ^ restart;
  z = splitmix64(state);
  state = z ^ hop;
  return splitmix64(state);
}

OptimizationResult basin_hop(const Objective& objective, const OptimizerConfig& config) {
  config.validate();
  OptimizationResult result;
  result.per_restart.resize(static_cast<std::size_t>(config.restarts));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (int i = next++; i < config.restarts; i = next++) {
      try {
        result.per_restart[static_cast<std::size_t>(i)] = run_restart(objective, config, i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int threads = std::min(config.workers, config.restarts);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  std::size_t best = 0;
  for (std::size_t i = 1; i < result.per_restart.size(); ++i) {
    if (result.per_restart[i].final_value < result.per_restart[best].final_value) best = i;
  }
  result.best_value = result.per_restart[best].final_value;
  result.best_x = result.per_restart[best].final_x;
  return result;
}

}  // namespace corrqaoa
