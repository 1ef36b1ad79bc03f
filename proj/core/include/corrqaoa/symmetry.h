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


#ifndef CORRQAOA_SYMMETRY_H_
#define CORRQAOA_SYMMETRY_H_

#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "corrqaoa/ansatz.h"

namespace corrqaoa {

/// Parameter transformations that leave the landscape of an even-n SK
/// instance unchanged, with noiseless or Pauli fluctuator noise.
///   kGammaShift:             gamma_k += 2 pi
///   kBetaShift:              beta_k += pi
///   kBetaNegateGammaShift:   beta_k -> -beta_k, gamma_k += pi and, for
///                            k < r, gamma_{k+1} += pi
///   kGlobalNegate:           every angle negated
/// `inverse` subtracts the shifts instead (the last two are involutions up
/// to the shifts). Cycle k is 1-based and ignored by kGlobalNegate.
enum class GeneratorKind { kGammaShift, kBetaShift, kBetaNegateGammaShift, kGlobalNegate };

struct SymmetryGenerator {
  GeneratorKind kind = GeneratorKind::kGlobalNegate;
  int k = 1;
  bool inverse = false;
};

std::string to_string(const SymmetryGenerator& g);

/// Throws std::out_of_range unless 1 <= k <= r.
Params apply_generator(const Params& params, const SymmetryGenerator& g);
Params apply_word(const Params& params, std::span<const SymmetryGenerator> word);

/// Every generator for r cycles: 3r cycle generators plus the global one.
std::vector<SymmetryGenerator> all_generators(int r);

/// Word of 1..max_length generators drawn uniformly (with random inverse).
std::vector<SymmetryGenerator> random_word(int r, int max_length, std::mt19937_64& rng);

struct InvarianceReport {
  std::string label;
  double value = 0.0;
  double transformed_value = 0.0;
  double residual = 0.0;
  bool pass = false;
};

using LandscapeFn = std::function<double(const Params&)>;

InvarianceReport check_invariance(const LandscapeFn& landscape, const Params& params,
                                  const SymmetryGenerator& g, double tol);
InvarianceReport check_invariance(const LandscapeFn& landscape, const Params& params,
                                  std::span<const SymmetryGenerator> word, double tol);

}  // namespace corrqaoa

#endif  // CORRQAOA_SYMMETRY_H_
