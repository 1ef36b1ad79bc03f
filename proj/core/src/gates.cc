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

#include "corrqaoa/gates.h"

#include <cmath>
#include <stdexcept>

namespace corrqaoa {
namespace {

constexpr Complex kI{0.0, 1.0};

std::vector<Complex> flatten(const Matrix2c& m) {
  return {m[0][0], m[0][1], m[1][0], m[1][1]};
}

}  // namespace

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::kRX: return "RX";
    case GateKind::kRY: return "RY";
    case GateKind::kRZ: return "RZ";
    case GateKind::kRZZ: return "RZZ";
    case GateKind::kSwap: return "SWAP";
    case GateKind::kRZZSwap: return "RZZ'";
    case GateKind::kX: return "X";
    case GateKind::kY: return "Y";
    case GateKind::kZ: return "Z";
    case GateKind::kUnitary: return "U";
  }
  return "?";
}

QubitGate QubitGate::single(int q, const Matrix2c& u) {
  return {GateKind::kUnitary, 0.0, {q}, flatten(u)};
}

QubitGate QubitGate::unitary(std::vector<int> targets, std::vector<Complex> matrix) {
  const std::size_t dim = std::size_t{1} << targets.size();
  if (matrix.size() != dim * dim) {
    throw std::invalid_argument("unitary matrix size does not match its target count");
  }
  return {GateKind::kUnitary, 0.0, std::move(targets), std::move(matrix)};
}

Matrix2c rx_matrix(double angle) {
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  return {{{c, -kI * s}, {-kI * s, c}}};
}

Matrix2c ry_matrix(double angle) {
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  return {{{c, -s}, {s, c}}};
}

Matrix2c rz_matrix(double angle) {
  return {{{std::polar(1.0, -angle / 2), 0.0}, {0.0, std::polar(1.0, angle / 2)}}};
}

Matrix2c pauli_x() { return {{{0.0, 1.0}, {1.0, 0.0}}}; }
Matrix2c pauli_y() { return {{{0.0, -kI}, {kI, 0.0}}}; }
Matrix2c pauli_z() { return {{{1.0, 0.0}, {0.0, -1.0}}}; }
Matrix2c identity2() { return {{{1.0, 0.0}, {0.0, 1.0}}}; }

std::vector<Complex> gate_matrix(const QubitGate& gate) {
  switch (gate.kind) {
    case GateKind::kRX: return flatten(rx_matrix(gate.angle));
    case GateKind::kRY: return flatten(ry_matrix(gate.angle));
    case GateKind::kRZ: return flatten(rz_matrix(gate.angle));
    case GateKind::kX: return flatten(pauli_x());
    case GateKind::kY: return flatten(pauli_y());
    case GateKind::kZ: return flatten(pauli_z());
    case GateKind::kRZZ:
    case GateKind::kSwap:
    case GateKind::kRZZSwap: {
      // exp(-i a ZZ / 2): phase e^{-ia/2} on even parity, e^{+ia/2} on odd.
      const Complex even = std::polar(1.0, -gate.angle / 2);
      const Complex odd = std::polar(1.0, gate.angle / 2);
      std::vector<Complex> m(16, 0.0);
      if (gate.kind == GateKind::kRZZ) {
        m[0] = even, m[5] = odd, m[10] = odd, m[15] = even;
      } else if (gate.kind == GateKind::kSwap) {
        m[0] = 1.0, m[6] = 1.0, m[9] = 1.0, m[15] = 1.0;
      } else {
        // RZZ * SWAP; SWAP maps |01> <-> |10>, both odd parity.
        m[0] = even, m[6] = odd, m[9] = odd, m[15] = even;
      }
      return m;
    }
    case GateKind::kUnitary: return gate.matrix;
  }
  throw std::logic_error("unknown gate kind");
}

double unitarity_error(const std::vector<Complex>& u) {
  const auto dim = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(u.size()))));
  if (dim * dim != u.size()) throw std::invalid_argument("matrix is not square");
  double worst = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < dim; ++k) acc += std::conj(u[k * dim + i]) * u[k * dim + j];
      if (i == j) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

double unitarity_error(const Matrix2c& u) { return unitarity_error(flatten(u)); }

bool is_monomial(const Matrix2c& u) {
  const bool diagonal = u[0][1] == 0.0 && u[1][0] == 0.0;
  const bool anti = u[0][0] == 0.0 && u[1][1] == 0.0;
  return diagonal || anti;
}

PauliAction pauli_action(const Matrix2c& v) {
  const Complex zero{};
  const bool diagonal = v[0][1] == zero && v[1][0] == zero;
  const bool anti = v[0][0] == zero && v[1][1] == zero;
  if (!diagonal && !anti) return {};
  // Phase on output bit 0 times the conjugate phase on output bit 1.
  const Complex a = diagonal ? v[0][0] : v[0][1];
  const Complex b = diagonal ? v[1][1] : v[1][0];
  const double re = a.real() * b.real() + a.imag() * b.imag();
  const double im = a.imag() * b.real() - a.real() * b.imag();
  if (im != 0.0 || std::abs(re) != 1.0) return {};
  return {true, anti, re < 0.0};
}

}  // namespace corrqaoa
