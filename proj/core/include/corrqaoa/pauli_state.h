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

#ifndef CORRQAOA_PAULI_STATE_H_
#define CORRQAOA_PAULI_STATE_H_

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "corrqaoa/gates.h"
#include "corrqaoa/hybrid_state.h"

namespace corrqaoa {

/// Index of the Pauli string i^{x.z} X^x Z^z as (x << n) | z, with qubit q
/// on bit n - 1 - q of x and z.
inline std::uint32_t pauli_index(std::uint32_t x, std::uint32_t z, int n) { return (x << n) | z; }

/// Index of Z_a Z_b.
std::uint32_t zz_index(int a, int b, int n);

/// Dense row-major matrix of Pauli string `s` on n qubits.
std::vector<Complex> pauli_string_matrix(std::uint32_t s, int n);

struct PauliTerm {
  std::uint32_t string = 0;
  double weight = 0.0;
};

/// exp(-i angle G / 2) for the Pauli string G.
struct PauliRotation {
  std::uint32_t generator = 0;
  double angle = 0.0;
};

/// True if the string commutes with X^{\otimes n}, i.e. holds an even
/// number of Y and Z factors.
inline bool is_parity_even(std::uint32_t s, int n) {
  return (std::popcount(s & ((std::uint32_t{1} << n) - 1)) & 1) == 0;
}

/// The same mixed qubit/fluctuator state as HybridState, but each block
/// P(c) * rho_c is stored as real coefficients tr(rho_c P_s).
///
/// Every block must commute with the global parity X^{\otimes n}; then only
/// the 4^n / 2 parity-even strings carry weight and only those are stored.
/// |+>^n, RX, RZZ and conjugation by any Pauli preserve this, and these are
/// the only operations offered. A Pauli error is a sign flip and a rotation
/// mixes pairs of coefficients.
class PauliHybridState {
 public:
  /// |+><+|^{\otimes n}; throws std::length_error unless 1 <= n <= 8.
  static PauliHybridState plus_state(int n_qubits);
  /// Single block; `rho` is a row-major 2^n x 2^n Hermitian matrix that
  /// commutes with X^{\otimes n} (std::invalid_argument otherwise).
  static PauliHybridState from_density(int n_qubits, std::span<const Complex> rho);

  static constexpr int kMaxPauliQubits = 8;

  int num_qubits() const { return n_qubits_; }
  /// Stored coefficients per block.
  std::size_t num_coefficients() const { return coeffs_; }
  std::size_t num_blocks() const { return std::size_t{1} << fluctuators_.size(); }
  const std::vector<int>& fluctuators() const { return fluctuators_; }
  bool has_fluctuator(int id) const;
  int fluctuator_bit(int id) const;

  /// tr(rho_c P_s); zero for parity-odd strings.
  double coefficient(std::size_t config, std::uint32_t string) const;
  double trace() const;

  void attach_fluctuator(int id, double p);
  void trace_out_fluctuator(int id);

  /// Conjugation by exp(-i angle G / 2). G must be parity-even
  /// (std::invalid_argument otherwise).
  void apply_rotation(std::uint32_t generator, double angle);
  /// The rotations in order, one pass over each block.
  void apply_rotations(std::span<const PauliRotation> rotations);
  /// RZZ(angle) on qubits a, b.
  void apply_zz_rotation(int a, int b, double angle);
  /// RX(angle) on qubit q.
  void apply_x_rotation(int q, double angle);
  /// Conjugation by a Pauli string (sign flips).
  void apply_pauli(std::uint32_t string);

  void apply_classical_transition(int id, const Matrix2& transition);
  /// Throws std::invalid_argument unless `v` is a Pauli matrix up to phase.
  void apply_controlled_error(int id, int qubit, const Matrix2c& v);
  /// Same contract as HybridState::apply_interactions; errors must be
  /// Pauli matrices up to phase.
  void apply_interactions(std::span<const Interaction> batch);

  /// sum_c sum_terms weight * tr(rho_c P_string).
  double expectation(std::span<const PauliTerm> terms) const;

  /// Density matrix of block c, and the sum over blocks.
  std::vector<Complex> block_density(std::size_t config) const;
  std::vector<Complex> reduced_density() const;

 private:
  PauliHybridState(int n_qubits, std::vector<double> data);

  std::uint32_t qubit_bit(int qubit) const { return std::uint32_t{1} << (n_qubits_ - 1 - qubit); }
  void check_qubit(int qubit) const;
  /// Pauli string of a single-qubit Pauli `v` on `qubit`.
  std::uint32_t error_string(int qubit, const Matrix2c& v) const;

  int n_qubits_;
  std::uint32_t compact(std::uint32_t s) const;
  std::uint32_t expand(std::uint32_t c) const;
  void check_string(std::uint32_t s) const;
  /// Per stored coefficient: -1 where the string anticommutes with `string`.
  const std::vector<double>& anticommute_signs(std::uint32_t string) const;

  std::size_t coeffs_;
  std::vector<int> fluctuators_;
  std::vector<double> data_;
};

}  // namespace corrqaoa

#endif  // CORRQAOA_PAULI_STATE_H_
