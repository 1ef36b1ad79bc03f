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

#ifndef CORRQAOA_GATES_H_
#define CORRQAOA_GATES_H_

#include <array>
#include <complex>
#include <string_view>
#include <vector>

namespace corrqaoa {

using Complex = std::complex<double>;

/// Complex 2x2 matrix, indexed as m[row][col].
using Matrix2c = std::array<std::array<Complex, 2>, 2>;

enum class GateKind {
  kRX,
  kRY,
  kRZ,
  kRZZ,
  kSwap,
  kRZZSwap,  // RZZ' = RZZ * SWAP
  kX,
  kY,
  kZ,
  kUnitary,  // dense matrix on the listed targets
};

std::string_view gate_name(GateKind kind);

/// A gate on explicit qubit indices. Qubit 0 is the most significant bit of
/// the computational basis index.
struct QubitGate {
  GateKind kind = GateKind::kX;
  double angle = 0.0;
  std::vector<int> targets;
  /// Row-major 2^k x 2^k matrix; only read for GateKind::kUnitary.
  std::vector<Complex> matrix;

  static QubitGate rx(int q, double angle) { return {GateKind::kRX, angle, {q}, {}}; }
  static QubitGate ry(int q, double angle) { return {GateKind::kRY, angle, {q}, {}}; }
  static QubitGate rz(int q, double angle) { return {GateKind::kRZ, angle, {q}, {}}; }
  static QubitGate rzz(int a, int b, double angle) { return {GateKind::kRZZ, angle, {a, b}, {}}; }
  static QubitGate swap(int a, int b) { return {GateKind::kSwap, 0.0, {a, b}, {}}; }
  static QubitGate rzz_swap(int a, int b, double angle) {
    return {GateKind::kRZZSwap, angle, {a, b}, {}};
  }
  static QubitGate x(int q) { return {GateKind::kX, 0.0, {q}, {}}; }
  static QubitGate y(int q) { return {GateKind::kY, 0.0, {q}, {}}; }
  static QubitGate z(int q) { return {GateKind::kZ, 0.0, {q}, {}}; }
  static QubitGate single(int q, const Matrix2c& u);
  static QubitGate unitary(std::vector<int> targets, std::vector<Complex> matrix);

  int arity() const { return static_cast<int>(targets.size()); }
};

/// Dense row-major matrix of the gate on its own targets (first target is
/// the most significant bit of the local index).
std::vector<Complex> gate_matrix(const QubitGate& gate);

Matrix2c rx_matrix(double angle);
Matrix2c ry_matrix(double angle);
Matrix2c rz_matrix(double angle);
Matrix2c pauli_x();
Matrix2c pauli_y();
Matrix2c pauli_z();
Matrix2c identity2();

/// Largest |(U^dagger U - 1)_ij| of a square row-major matrix.
double unitarity_error(const std::vector<Complex>& u);
double unitarity_error(const Matrix2c& u);

/// A 2x2 matrix with exactly one nonzero per row and column. Conjugating a
/// density matrix by such an operator is a permutation with phases.
bool is_monomial(const Matrix2c& u);

/// Conjugation action of a single-qubit Pauli operator, up to global phase:
/// `flip` for an X component, `sign` for a Z component (Y has both).
struct PauliAction {
  bool ok = false;
  bool flip = false;
  bool sign = false;
};

/// Recognizes matrices equal to I, X, Y or Z times a phase. Exact: any
/// rounding in the entries makes `ok` false.
PauliAction pauli_action(const Matrix2c& v);

}  // namespace corrqaoa

#endif  // CORRQAOA_GATES_H_
