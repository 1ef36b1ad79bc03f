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

#ifndef CORRQAOA_HYBRID_STATE_H_
#define CORRQAOA_HYBRID_STATE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "corrqaoa/fluctuator.h"
#include "corrqaoa/gates.h"

namespace corrqaoa {

inline constexpr int kMaxQubits = 12;

/// A unitary that maps basis states to basis states up to a phase, stored in
/// gather form: (U rho U^dagger)[y][y'] = phase[y] conj(phase[y']) rho[source[y]][source[y']].
struct MonomialOperator {
  std::vector<std::uint32_t> source;
  std::vector<Complex> phase;

  static MonomialOperator identity(std::size_t dim);
  /// Returns `after * before`.
  static MonomialOperator compose(const MonomialOperator& after, const MonomialOperator& before);
  bool is_diagonal() const;
};

/// One fluctuator/qubit interaction: the fluctuator takes a Markov step with
/// `transition`, then `error` acts on `qubit` iff the fluctuator is excited.
struct Interaction {
  int fluctuator = 0;
  int qubit = 0;
  Matrix2 transition{};
  Matrix2c error{};
};

struct Diagnostics {
  double trace_deviation = 0.0;
  double hermiticity_deviation = 0.0;
  double min_eigenvalue = 0.0;
  std::vector<double> block_traces;
  std::vector<double> block_min_eigenvalues;

  bool ok(double trace_tol = 1e-10, double hermitian_tol = 1e-12, double psd_tol = 1e-10) const {
    return trace_deviation <= trace_tol && hermiticity_deviation <= hermitian_tol &&
           min_eigenvalue >= -psd_tol;
  }
};

/// Density operator of n qubits jointly with a set of classical binary
/// fluctuators, stored block-diagonally in the classical configuration.
///
/// Block c holds P(c) * rho_c, the qubit state conditioned on configuration
/// c, as a dense row-major 2^n x 2^n matrix. Bit k of c is the value of the
/// k-th live fluctuator (in attachment order). Qubit 0 is the most
/// significant bit of the row/column index.
///
/// Every operation acts on all blocks; a state is owned by one evaluation at
/// a time.
class HybridState {
 public:
  /// |+><+|^{\otimes n}; throws std::length_error unless 1 <= n <= kMaxQubits.
  static HybridState plus_state(int n_qubits);
  /// A single block holding `rho` (row-major, 2^n x 2^n).
  static HybridState from_density(int n_qubits, std::vector<Complex> rho);

  int num_qubits() const { return n_qubits_; }
  std::size_t dim() const { return dim_; }
  std::size_t num_blocks() const { return std::size_t{1} << fluctuators_.size(); }
  const std::vector<int>& fluctuators() const { return fluctuators_; }
  bool has_fluctuator(int id) const;
  /// Bit position of fluctuator `id` in the configuration index.
  int fluctuator_bit(int id) const;

  std::span<Complex> block(std::size_t config);
  std::span<const Complex> block(std::size_t config) const;
  double block_trace(std::size_t config) const;
  double trace() const;

  void attach_fluctuator(int id, double p);
  void trace_out_fluctuator(int id);

  void apply_unitary(const QubitGate& gate);
  /// Applies a sequence of gates block by block. Runs of permutation/phase
  /// gates are fused into one pass.
  void apply_gates(std::span<const QubitGate> gates);
  void apply_monomial(const MonomialOperator& op);
  /// Conjugates every block by diag(d).
  void apply_diagonal(std::span<const Complex> d);
  void apply_single_qubit(int qubit, const Matrix2c& u);

  /// new_block(bit = b) = sum_a T[b][a] old_block(bit = a).
  void apply_classical_transition(int id, const Matrix2& transition);
  /// Conjugates every block whose fluctuator bit is 1 by `v` on `qubit`.
  void apply_controlled_error(int id, int qubit, const Matrix2c& v);
  /// Equivalent to applying each interaction in order (transition, then
  /// controlled error). Batches with distinct fluctuators and distinct qubits
  /// run fused.
  void apply_interactions(std::span<const Interaction> batch);

  /// sum_c sum_z diag[z] block_c[z][z].
  double expectation(std::span<const double> diag) const;

  /// Sum of all blocks: the qubit state with every fluctuator traced out.
  std::vector<Complex> reduced_density() const;

  Diagnostics validate() const;

 private:
  HybridState(int n_qubits, std::vector<Complex> data);

  std::size_t block_size() const { return dim_ * dim_; }
  std::uint32_t qubit_mask(int qubit) const;
  void check_qubit(int qubit) const;

  void block_monomial(Complex* rho, const MonomialOperator& op);
  void block_pauli(Complex* rho, std::uint32_t flip, std::uint32_t sign) const;
  void block_single_qubit(Complex* rho, std::uint32_t mask, const Matrix2c& u) const;
  void block_dense(Complex* rho, std::span<const int> targets, std::span<const Complex> u);

  int n_qubits_;
  std::size_t dim_;
  std::vector<int> fluctuators_;
  std::vector<Complex> data_;
  std::vector<Complex> scratch_;
};

/// Gather-form operator for a permutation/phase gate (RZ, RZZ, SWAP, RZZ',
/// X, Y, Z, or a monomial 2x2 unitary). Throws for other gates.
MonomialOperator monomial_for(const QubitGate& gate, int n_qubits);
bool gate_is_monomial(const QubitGate& gate);

/// A monomial 2x2 unitary on one qubit.
MonomialOperator monomial_for(int qubit, const Matrix2c& u, int n_qubits);

}  // namespace corrqaoa

#endif  // CORRQAOA_HYBRID_STATE_H_
