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

#ifndef CORRQAOA_SUSCEPTIBILITY_H_
#define CORRQAOA_SUSCEPTIBILITY_H_

#include <vector>

#include "corrqaoa/ansatz.h"
#include "corrqaoa/noisy_executor.h"
#include "corrqaoa/sk_instance.h"

namespace corrqaoa {

/// One realization with a single run of excitations on a single chain.
struct ChainMember {
  int chain = 0;   // index into SlotGrid::chains
  int first = 0;   // position of the run's first slot in the chain
  int length = 0;  // number of excited slots
  /// Run ends that sit strictly inside the chain (0, 1 or 2).
  int boundary = 0;
  std::vector<Slot> excited;
};

/// All single-run realizations of one run length.
struct ChainRealizationSet {
  int length = 0;
  std::vector<ChainMember> members;
};

/// Every single-run realization of the grid, grouped by run length
/// 1..(longest chain). Chains are walked in their visiting order.
std::vector<ChainRealizationSet> chain_sets(const SlotGrid& grid);

/// d p_b / dp at p = 0 for a single-run member: kappa^(steps inside the
/// run) times (1 - kappa^gap) for each interior end. With unit gaps this is
/// (1 - kappa)^boundary kappa^(length - 1).
double member_weight(const SlotGrid& grid, const ChainMember& member, double kappa);

struct ChainLengthTerm {
  int length = 0;
  std::size_t count = 0;
  /// Sum of member weights.
  double weight = 0.0;
  /// Sum of weight * <H>_b.
  double weighted_energy = 0.0;
};

struct SusceptibilityReport {
  double chi = 0.0;
  /// Noiseless <H>.
  double h0 = 0.0;
  /// Coefficient of h0; equals minus the sum of all member weights.
  double zero_coefficient = 0.0;
  std::vector<ChainLengthTerm> terms;
};

/// chi = d<H>/dp at p = 0 by enumerating single-run realizations on the
/// landscape's grid. The landscape's p is ignored; its kappa is used.
SusceptibilityReport chi_exact(const NoisyLandscape& landscape, const Params& params);

SusceptibilityReport chi_exact(const SkInstance& instance, const AnsatzCircuit& circuit,
                               const Params& params, const NoiseModel& model);

/// Forward differences of the landscape in p at p = 0, Richardson
/// extrapolated over steps h and h/2. Throws std::domain_error unless
/// 0 < h <= 1e-3.
double chi_finite_difference(const SkInstance& instance, const AnsatzCircuit& circuit,
                             const Params& params, const NoiseModel& model, double h);

/// AR(0) + p chi / C*. Throws std::domain_error if c_star is zero.
double linearized_ar(double ar_at_zero, double chi, double c_star, double p);

}  // namespace corrqaoa

#endif  // CORRQAOA_SUSCEPTIBILITY_H_
