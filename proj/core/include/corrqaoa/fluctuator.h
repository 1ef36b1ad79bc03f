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

#ifndef CORRQAOA_FLUCTUATOR_H_
#define CORRQAOA_FLUCTUATOR_H_

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace corrqaoa {

/// Real 2x2 matrix, indexed as m[row][col].
using Matrix2 = std::array<std::array<double, 2>, 2>;

/// Exact enumeration is refused beyond this many bits (2^20 realizations).
inline constexpr int kMaxEnumerationLength = 20;

/// A single classical binary fluctuator modelled as a discrete-time Markov
/// chain on the random-variable values {0, 1}.
///
/// The steady state is s0 = (1 - p, p). At every step the fluctuator keeps
/// its value with probability kappa and is redrawn from s0 otherwise. All
/// matrices are column-stochastic: T[b][a] is the probability of moving
/// from value a to value b.
class FluctuatorChain {
 public:
  /// Throws std::domain_error unless 0 <= p <= 1 and 0 <= kappa <= 1.
  FluctuatorChain(double p, double kappa);

  double p() const { return p_; }
  double kappa() const { return kappa_; }

  /// Probability of value `bit` under the steady state.
  double steady(int bit) const { return bit ? p_ : 1.0 - p_; }

  Matrix2 transition() const;
  Matrix2 transition_power(std::uint64_t t) const;

 private:
  double p_;
  double kappa_;
};

/// One sampled sequence of fluctuator values b_0 ... b_{L-1}.
struct Realization {
  std::vector<std::uint8_t> bits;

  std::size_t size() const { return bits.size(); }
};

Matrix2 transition_matrix(double p, double kappa);
Matrix2 transition_power(double p, double kappa, std::uint64_t t);

/// tau = -1 / log(kappa), with tau(0) = 0 and tau(1) = +infinity.
double correlation_time(double kappa);

/// E(B_t B_{t+dt}) - E(B_t) E(B_{t+dt}) in the steady state.
double correlator(double p, double kappa, std::int64_t dt);

/// Probability of a realization observed at consecutive steps.
double realization_probability(const FluctuatorChain& chain,
                               std::span<const std::uint8_t> bits);

/// Probability of a realization observed at irregular steps. `gaps[k]` is
/// the number of Markov steps between observation k and k + 1; the chain
/// evolves unobserved in between.
double realization_probability(const FluctuatorChain& chain,
                               std::span<const std::uint8_t> bits,
                               std::span<const int> gaps);

/// Sum of realization probabilities over all bit strings of `length` with
/// bit t set. Exact enumeration; throws std::length_error above
/// kMaxEnumerationLength.
double marginal_excitation(const FluctuatorChain& chain, int length, int t);

/// d p_b / d p at p = 0 for a chain with m steps (bits.size() == m + 1).
/// Nonzero only for the all-zero string and strings with a single run of
/// ones.
double realization_prob_derivative_at_zero(double kappa, int m,
                                           std::span<const std::uint8_t> bits);

/// Same derivative for an irregularly observed chain; see the gapped
/// realization_probability overload.
double realization_prob_derivative_at_zero(double kappa,
                                           std::span<const std::uint8_t> bits,
                                           std::span<const int> gaps);

/// Draws b_0 from the steady state and each later bit through T.
Realization sample_realization(const FluctuatorChain& chain, int length,
                               std::mt19937_64& rng);

/// Uniform double in [0, 1) built from the top 53 bits of one engine draw.
/// Unlike std::uniform_real_distribution this is identical on every
/// standard library.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace corrqaoa

#endif  // CORRQAOA_FLUCTUATOR_H_
