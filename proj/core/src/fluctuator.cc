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

#include "corrqaoa/fluctuator.h"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace corrqaoa {
namespace {

bool is_probability(double x) { return x >= 0.0 && x <= 1.0; }

// kappa^t for integer t. pow(0, 0) == 1, which is what T^0 = 1 needs.
double kappa_pow(double kappa, std::uint64_t t) {
  return std::pow(kappa, static_cast<double>(t));
}

// Index of the first and last set bit, or {-1, -1}. Returns {-2, -2} when
// the set bits do not form a single contiguous run.
std::pair<int, int> single_run(std::span<const std::uint8_t> bits) {
  int first = -1;
  int last = -1;
  for (int i = 0; i < static_cast<int>(bits.size()); ++i) {
    if (bits[i] == 0) continue;
    if (first < 0) {
      first = i;
    } else if (last != i - 1) {
      return {-2, -2};
    }
    last = i;
  }
  return {first, last};
}

}  // namespace

FluctuatorChain::FluctuatorChain(double p, double kappa) : p_(p), kappa_(kappa) {
  if (!is_probability(p) || !is_probability(kappa)) {
    throw std::domain_error("fluctuator requires 0 <= p <= 1 and 0 <= kappa <= 1 (got p=" +
                            std::to_string(p) + ", kappa=" + std::to_string(kappa) + ")");
  }
}

Matrix2 FluctuatorChain::transition() const {
  const double reset = 1.0 - kappa_;
  return {{{kappa_ + reset * (1.0 - p_), reset * (1.0 - p_)},
           {reset * p_, kappa_ + reset * p_}}};
}

Matrix2 FluctuatorChain::transition_power(std::uint64_t t) const {
  const double kt = kappa_pow(kappa_, t);
  const double p = p_;
  // Factored so every entry stays within [0, 1] after rounding.
  const double mix = 1.0 - kt;
  return {{{1.0 - p * mix, (1.0 - p) * mix}, {p * mix, 1.0 - (1.0 - p) * mix}}};
}

Matrix2 transition_matrix(double p, double kappa) {
  return FluctuatorChain(p, kappa).transition();
}

Matrix2 transition_power(double p, double kappa, std::uint64_t t) {
  return FluctuatorChain(p, kappa).transition_power(t);
}

double correlation_time(double kappa) {
  if (!is_probability(kappa)) throw std::domain_error("kappa outside [0, 1]");
  if (kappa == 0.0) return 0.0;
  if (kappa == 1.0) return std::numeric_limits<double>::infinity();
  return -1.0 / std::log(kappa);
}

double correlator(double p, double kappa, std::int64_t dt) {
  const FluctuatorChain chain(p, kappa);
  const std::uint64_t lag = static_cast<std::uint64_t>(dt < 0 ? -dt : dt);
  // p T^dt[1][1] - p^2 with T^dt[1][1] = p + (1 - p) kappa^dt.
  return chain.p() * (1.0 - chain.p()) * kappa_pow(chain.kappa(), lag);
}

double realization_probability(const FluctuatorChain& chain,
                               std::span<const std::uint8_t> bits) {
  if (bits.empty()) throw std::invalid_argument("realization must have length >= 1");
  const Matrix2 t = chain.transition();
  double prob = chain.steady(bits[0]);
  for (std::size_t i = 0; i + 1 < bits.size(); ++i) prob *= t[bits[i + 1]][bits[i]];
  return prob;
}

double realization_probability(const FluctuatorChain& chain,
                               std::span<const std::uint8_t> bits,
                               std::span<const int> gaps) {
  if (bits.empty()) throw std::invalid_argument("realization must have length >= 1");
  if (gaps.size() + 1 != bits.size()) {
    throw std::invalid_argument("gapped realization needs bits.size() - 1 gaps");
  }
  double prob = chain.steady(bits[0]);
  for (std::size_t i = 0; i + 1 < bits.size(); ++i) {
    if (gaps[i] < 1) throw std::invalid_argument("gaps must be >= 1");
    prob *= chain.transition_power(static_cast<std::uint64_t>(gaps[i]))[bits[i + 1]][bits[i]];
  }
  return prob;
}

double marginal_excitation(const FluctuatorChain& chain, int length, int t) {
  if (length < 1 || t < 0 || t >= length) throw std::out_of_range("need 0 <= t < length");
  if (length > kMaxEnumerationLength) {
    throw std::length_error("marginal_excitation enumerates 2^length realizations; length " +
                            std::to_string(length) + " exceeds the cap of " +
                            std::to_string(kMaxEnumerationLength));
  }
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(length));
  double total = 0.0;
  const std::uint64_t count = std::uint64_t{1} << length;
  for (std::uint64_t word = 0; word < count; ++word) {
    if (((word >> t) & 1U) == 0) continue;
    for (int i = 0; i < length; ++i) bits[i] = static_cast<std::uint8_t>((word >> i) & 1U);
    total += realization_probability(chain, bits);
  }
  return total;
}

double realization_prob_derivative_at_zero(double kappa,
                                           std::span<const std::uint8_t> bits,
                                           std::span<const int> gaps) {
  if (!is_probability(kappa)) throw std::domain_error("kappa outside [0, 1]");
  if (bits.empty() || gaps.size() + 1 != bits.size()) {
    throw std::invalid_argument("gapped realization needs bits.size() - 1 gaps");
  }
  const int last_index = static_cast<int>(bits.size()) - 1;
  const auto [first, last] = single_run(bits);
  if (first == -2) return 0.0;
  if (first == -1) {
    double coefficient = 1.0;
    for (int g : gaps) coefficient += 1.0 - kappa_pow(kappa, static_cast<std::uint64_t>(g));
    return -coefficient;
  }
  double weight = 1.0;
  if (first > 0) weight *= 1.0 - kappa_pow(kappa, static_cast<std::uint64_t>(gaps[first - 1]));
  for (int k = first; k < last; ++k) weight *= kappa_pow(kappa, static_cast<std::uint64_t>(gaps[k]));
  if (last < last_index) weight *= 1.0 - kappa_pow(kappa, static_cast<std::uint64_t>(gaps[last]));
  return weight;
}

double realization_prob_derivative_at_zero(double kappa, int m,
                                           std::span<const std::uint8_t> bits) {
  if (m < 0 || bits.size() != static_cast<std::size_t>(m) + 1) {
    throw std::invalid_argument("realization length must be m + 1");
  }
  const std::vector<int> gaps(static_cast<std::size_t>(m), 1);
  return realization_prob_derivative_at_zero(kappa, bits, gaps);
}

Realization sample_realization(const FluctuatorChain& chain, int length,
                               std::mt19937_64& rng) {
  if (length < 1) throw std::invalid_argument("realization must have length >= 1");
  const Matrix2 t = chain.transition();
  Realization out;
  out.bits.resize(static_cast<std::size_t>(length));
  std::uint8_t bit = uniform01(rng) < chain.p() ? 1 : 0;
  out.bits[0] = bit;
  for (int i = 1; i < length; ++i) {
    bit = uniform01(rng) < t[1][bit] ? 1 : 0;
    out.bits[i] = bit;
  }
  return out;
}

}  // namespace corrqaoa
