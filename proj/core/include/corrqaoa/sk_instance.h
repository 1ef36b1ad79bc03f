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

#ifndef CORRQAOA_SK_INSTANCE_H_
#define CORRQAOA_SK_INSTANCE_H_

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace corrqaoa {

/// Sherrington-Kirkpatrick instance: complete graph on n vertices with
/// +-1 edge weights and no linear terms. Weights are stored row-major over
/// pairs i < j: (0,1), (0,2), ..., (0,n-1), (1,2), ...
class SkInstance {
 public:
  SkInstance(int n, std::vector<int> weights);

  int num_qubits() const { return n_; }
  const std::vector<int>& weights() const { return weights_; }
  int weight(int i, int j) const;

  /// '+'/'-' encoding, one character per pair in row-major order.
  std::string to_string() const;

 private:
  int n_;
  std::vector<int> weights_;
};

/// Parses a string of '+'/'-' of length n(n-1)/2, optionally prefixed by
/// "w=". Throws std::invalid_argument on a bad character or length.
SkInstance parse_instance(std::string_view text);

/// Independent uniform +-1 weights.
SkInstance random_instance(int n, std::mt19937_64& rng);

/// C(z) = sum_{i<j} w_ij z_i z_j for z in {-1, +1}^n.
int cost(const SkInstance& instance, std::span<const int> z);

/// Spin value of qubit q in basis index `index` (qubit 0 is the MSB;
/// bit 0 maps to +1, bit 1 to -1).
inline int spin(std::uint32_t index, int q, int n) { return ((index >> (n - 1 - q)) & 1U) ? -1 : 1; }

std::vector<int> spins_of(std::uint32_t index, int n);

struct BruteForceResult {
  int c_star = 0;
  /// Basis indices of every minimizing assignment, ascending.
  std::vector<std::uint32_t> minimizers;
};

inline constexpr int kMaxBruteForceQubits = 24;

BruteForceResult brute_force_optimum(const SkInstance& instance);

/// Diagonal of H = sum_{i<j} w_ij Z_i Z_j in the computational basis.
struct DiagonalHamiltonian {
  std::vector<double> diag;
};

/// Hamiltonian as measured on physical qubits after a circuit that left
/// logical qubit permutation[i] on physical qubit i.
DiagonalHamiltonian hamiltonian(const SkInstance& instance, std::span<const int> permutation);
DiagonalHamiltonian hamiltonian(const SkInstance& instance);

bool is_permutation(std::span<const int> permutation);
std::vector<int> identity_permutation(int n);
std::vector<int> inverse_permutation(std::span<const int> permutation);

}  // namespace corrqaoa

#endif  // CORRQAOA_SK_INSTANCE_H_
