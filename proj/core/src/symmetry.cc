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


#include "corrqaoa/symmetry.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace corrqaoa {

std::string to_string(const SymmetryGenerator& g) {
  std::string s;
  switch (g.kind) {
    case GeneratorKind::kGammaShift:
      s = "gamma-shift-2pi(" + std::to_string(g.k) + ")";
      break;
    case GeneratorKind::kBetaShift:
      s = "beta-shift-pi(" + std::to_string(g.k) + ")";
      break;
    case GeneratorKind::kBetaNegateGammaShift:
      s = "beta-negate-gamma-shift(" + std::to_string(g.k) + ")";
      break;
    case GeneratorKind::kGlobalNegate:
      return "global-negate";
  }
  return g.inverse ? s + "^-1" : s;
}

Params apply_generator(const Params& params, const SymmetryGenerator& g) {
  const int r = params.cycles();
  if (static_cast<int>(params.gammas.size()) != r) throw std::invalid_argument("betas and gammas differ in length");
  Params out = params;
  if (g.kind == GeneratorKind::kGlobalNegate) {
    for (double& b : out.betas) b = -b;
    for (double& c : out.gammas) c = -c;
    return out;
  }
  if (g.k < 1 || g.k > r) {
    throw std::out_of_range("generator cycle " + std::to_string(g.k) + " outside 1.." + std::to_string(r));
  }
  const double sign = g.inverse ? -1.0 : 1.0;
  const std::size_t k = static_cast<std::size_t>(g.k - 1);
  switch (g.kind) {
    case GeneratorKind::kGammaShift:
      out.gammas[k] += sign * 2.0 * std::numbers::pi;
      break;
    case GeneratorKind::kBetaShift:
      out.betas[k] += sign * std::numbers::pi;
      break;
    case GeneratorKind::kBetaNegateGammaShift:
      out.betas[k] = -out.betas[k];
      out.gammas[k] += sign * std::numbers::pi;
      if (g.k < r) out.gammas[k + 1] += sign * std::numbers::pi;
      break;
    case GeneratorKind::kGlobalNegate:
      break;
  }
  return out;
}

Params apply_word(const Params& params, std::span<const SymmetryGenerator> word) {
  Params out = params;
  for (const SymmetryGenerator& g : word) out = apply_generator(out, g);
  return out;
}

std::vector<SymmetryGenerator> all_generators(int r) {
  if (r < 1) throw std::invalid_argument("need at least one cycle");
  std::vector<SymmetryGenerator> out;
  for (GeneratorKind kind :
       {GeneratorKind::kGammaShift, GeneratorKind::kBetaShift, GeneratorKind::kBetaNegateGammaShift}) {
    for (int k = 1; k <= r; ++k) out.push_back({kind, k, false});
  }
  out.push_back({GeneratorKind::kGlobalNegate, 1, false});
  return out;
}

std::vector<SymmetryGenerator> random_word(int r, int max_length, std::mt19937_64& rng) {
  if (max_length < 1) throw std::invalid_argument("word length must be >= 1");
  const std::vector<SymmetryGenerator> gens = all_generators(r);
  std::uniform_int_distribution<int> len_dist(1, max_length);
  std::uniform_int_distribution<std::size_t> gen_dist(0, gens.size() - 1);
  std::bernoulli_distribution inv;
  std::vector<SymmetryGenerator> word(static_cast<std::size_t>(len_dist(rng)));
  for (SymmetryGenerator& g : word) {
    g = gens[gen_dist(rng)];
    g.inverse = inv(rng);
  }
  return word;
}

InvarianceReport check_invariance(const LandscapeFn& landscape, const Params& params,
                                  const SymmetryGenerator& g, double tol) {
  return check_invariance(landscape, params, std::span<const SymmetryGenerator>(&g, 1), tol);
}

InvarianceReport check_invariance(const LandscapeFn& landscape, const Params& params,
                                  std::span<const SymmetryGenerator> word, double tol) {
  InvarianceReport r;
  for (const SymmetryGenerator& g : word) r.label += (r.label.empty() ? "" : " * ") + to_string(g);
  r.value = landscape(params);
  r.transformed_value = landscape(apply_word(params, word));
  r.residual = std::abs(r.value - r.transformed_value);
  r.pass = r.residual <= tol;
  return r;
}

}  // namespace corrqaoa
