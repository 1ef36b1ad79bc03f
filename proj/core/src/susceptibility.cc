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

#include "corrqaoa/susceptibility.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "corrqaoa/fluctuator.h"

namespace corrqaoa {

std::vector<ChainRealizationSet> chain_sets(const SlotGrid& grid) {
  std::size_t longest = 0;
  for (const SlotChain& c : grid.chains) longest = std::max(longest, c.slots.size());
  std::vector<ChainRealizationSet> sets(longest);
  for (std::size_t l = 0; l < longest; ++l) sets[l].length = static_cast<int>(l + 1);
  for (std::size_t ci = 0; ci < grid.chains.size(); ++ci) {
    const SlotChain& chain = grid.chains[ci];
    const int size = static_cast<int>(chain.slots.size());
    for (int length = 1; length <= size; ++length) {
      for (int first = 0; first + length <= size; ++first) {
        ChainMember m;
        m.chain = static_cast<int>(ci);
        m.first = first;
        m.length = length;
        m.boundary = (first > 0 ? 1 : 0) + (first + length < size ? 1 : 0);
        m.excited.assign(chain.slots.begin() + first, chain.slots.begin() + first + length);
        sets[static_cast<std::size_t>(length - 1)].members.push_back(std::move(m));
      }
    }
  }
  return sets;
}

double member_weight(const SlotGrid& grid, const ChainMember& member, double kappa) {
  const SlotChain& chain = grid.chains.at(static_cast<std::size_t>(member.chain));
  std::vector<std::uint8_t> bits(chain.slots.size(), 0);
  for (int k = 0; k < member.length; ++k) bits.at(static_cast<std::size_t>(member.first + k)) = 1;
  return realization_prob_derivative_at_zero(kappa, bits, chain.gaps);
}

SusceptibilityReport chi_exact(const NoisyLandscape& landscape, const Params& params) {
  const double kappa = landscape.model().kappa;
  if (!(kappa >= 0.0 && kappa <= 1.0)) throw std::domain_error("kappa outside [0, 1]");
  SusceptibilityReport report;
  report.h0 = landscape.value_given_realization(params, {});
  double total_weight = 0.0;
  double sum = 0.0;
  for (const ChainRealizationSet& set : chain_sets(landscape.grid())) {
    ChainLengthTerm term;
    term.length = set.length;
    term.count = set.members.size();
    for (const ChainMember& m : set.members) {
      const double w = member_weight(landscape.grid(), m, kappa);
      if (w == 0.0) continue;
      term.weight += w;
      term.weighted_energy += w * landscape.value_given_realization(params, m.excited);
    }
    total_weight += term.weight;
    sum += term.weighted_energy;
    report.terms.push_back(term);
  }
  // Probabilities sum to one for every p, so the derivatives sum to zero.
  report.zero_coefficient = -total_weight;
  report.chi = sum + report.zero_coefficient * report.h0;
  return report;
}

SusceptibilityReport chi_exact(const SkInstance& instance, const AnsatzCircuit& circuit,
                               const Params& params, const NoiseModel& model) {
  NoiseModel at_zero = model;
  at_zero.p = 0.0;
  return chi_exact(NoisyLandscape(instance, circuit, at_zero), params);
}

double chi_finite_difference(const SkInstance& instance, const AnsatzCircuit& circuit,
                             const Params& params, const NoiseModel& model, double h) {
  if (!(h > 0.0 && h <= 1e-3)) throw std::domain_error("finite-difference step must lie in (0, 1e-3]");
  auto at = [&](double p) {
    NoiseModel m = model;
    m.p = p;
    return NoisyLandscape(instance, circuit, m).value(params);
  };
  const double c0 = at(0.0);
  const double d1 = (at(h) - c0) / h;
  const double d2 = (at(0.5 * h) - c0) / (0.5 * h);
  return 2.0 * d2 - d1;
}

double linearized_ar(double ar_at_zero, double chi, double c_star, double p) {
  if (c_star == 0.0) throw std::domain_error("C* is zero");
  return ar_at_zero + p * chi / c_star;
}

}  // namespace corrqaoa
