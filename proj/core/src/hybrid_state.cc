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

#include "corrqaoa/hybrid_state.h"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <string>

namespace corrqaoa {
namespace {

// Plain complex product. std::complex operator* carries inf/nan recovery
// that blocks vectorization and dominates the inner loops.
inline Complex cmul(Complex a, Complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

inline Complex rmul(double a, Complex b) { return {a * b.real(), a * b.imag()}; }

// Hard cap on stored complex numbers (2^27 * 16 bytes = 2 GiB).
constexpr std::size_t kMaxElements = std::size_t{1} << 27;

// Elements per block and tile when mixing blocks along configuration bits;
// 64 blocks of one tile stay in L1.
constexpr std::size_t kTile = 32;

bool is_identity(const Matrix2& t) {
  return t[0][0] == 1.0 && t[0][1] == 0.0 && t[1][0] == 0.0 && t[1][1] == 1.0;
}

// Phase matrix phase[y] * conj(phase[y']) shared by every block.
std::vector<Complex> outer_phase(const MonomialOperator& op) {
  const std::size_t dim = op.phase.size();
  std::vector<Complex> out(dim * dim);
  for (std::size_t y = 0; y < dim; ++y) {
    for (std::size_t z = 0; z < dim; ++z) out[y * dim + z] = cmul(op.phase[y], std::conj(op.phase[z]));
  }
  return out;
}

void gather_with_phase(const Complex* rho, Complex* out, const MonomialOperator& op,
                       const Complex* phase2, std::size_t dim) {
  const std::uint32_t* src = op.source.data();
  for (std::size_t y = 0; y < dim; ++y) {
    const Complex* row = rho + static_cast<std::size_t>(src[y]) * dim;
    const Complex* ph = phase2 + y * dim;
    Complex* o = out + y * dim;
    for (std::size_t z = 0; z < dim; ++z) o[z] = cmul(ph[z], row[src[z]]);
  }
}

void mix_pair(double* a, double* b, std::size_t len, const Matrix2& t) {
  const double t00 = t[0][0], t01 = t[0][1], t10 = t[1][0], t11 = t[1][1];
  for (std::size_t e = 0; e < len; ++e) {
    const double x = a[e];
    const double y = b[e];
    a[e] = t00 * x + t01 * y;
    b[e] = t10 * x + t11 * y;
  }
}

}  // namespace

MonomialOperator MonomialOperator::identity(std::size_t dim) {
  MonomialOperator op;
  op.source.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) op.source[i] = static_cast<std::uint32_t>(i);
  op.phase.assign(dim, Complex{1.0, 0.0});
  return op;
}

MonomialOperator MonomialOperator::compose(const MonomialOperator& after,
                                           const MonomialOperator& before) {
  if (after.source.size() != before.source.size()) {
    throw std::invalid_argument("monomial operators of different dimension");
  }
  const std::size_t dim = after.source.size();
  MonomialOperator out;
  out.source.resize(dim);
  out.phase.resize(dim);
  for (std::size_t y = 0; y < dim; ++y) {
    const std::uint32_t mid = after.source[y];
    out.source[y] = before.source[mid];
    out.phase[y] = cmul(after.phase[y], before.phase[mid]);
  }
  return out;
}

bool MonomialOperator::is_diagonal() const {
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (source[i] != i) return false;
  }
  return true;
}

bool gate_is_monomial(const QubitGate& gate) {
  switch (gate.kind) {
    case GateKind::kRZ:
    case GateKind::kRZZ:
    case GateKind::kSwap:
    case GateKind::kRZZSwap:
    case GateKind::kX:
    case GateKind::kY:
    case GateKind::kZ:
      return true;
    case GateKind::kUnitary:
      if (gate.arity() != 1) return false;
      return is_monomial({{{gate.matrix[0], gate.matrix[1]}, {gate.matrix[2], gate.matrix[3]}}});
    default:
      return false;
  }
}

MonomialOperator monomial_for(int qubit, const Matrix2c& u, int n_qubits) {
  if (!is_monomial(u)) throw std::invalid_argument("2x2 matrix is not monomial");
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::uint32_t mask = std::uint32_t{1} << (n_qubits - 1 - qubit);
  const bool flips = u[0][0] == 0.0;
  MonomialOperator op;
  op.source.resize(dim);
  op.phase.resize(dim);
  for (std::size_t y = 0; y < dim; ++y) {
    const int out_bit = (y & mask) ? 1 : 0;
    const int in_bit = flips ? 1 - out_bit : out_bit;
    op.source[y] = flips ? static_cast<std::uint32_t>(y ^ mask) : static_cast<std::uint32_t>(y);
    op.phase[y] = u[out_bit][in_bit];
  }
  return op;
}

MonomialOperator monomial_for(const QubitGate& gate, int n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  for (int t : gate.targets) {
    if (t < 0 || t >= n_qubits) throw std::out_of_range("gate target out of range");
  }
  auto mask_of = [n_qubits](int q) { return std::uint32_t{1} << (n_qubits - 1 - q); };
  switch (gate.kind) {
    case GateKind::kRZ: return monomial_for(gate.targets[0], rz_matrix(gate.angle), n_qubits);
    case GateKind::kX: return monomial_for(gate.targets[0], pauli_x(), n_qubits);
    case GateKind::kY: return monomial_for(gate.targets[0], pauli_y(), n_qubits);
    case GateKind::kZ: return monomial_for(gate.targets[0], pauli_z(), n_qubits);
    case GateKind::kUnitary:
      if (gate.arity() == 1) {
        return monomial_for(gate.targets[0],
                            {{{gate.matrix[0], gate.matrix[1]}, {gate.matrix[2], gate.matrix[3]}}},
                            n_qubits);
      }
      break;
    case GateKind::kRZZ:
    case GateKind::kSwap:
    case GateKind::kRZZSwap: {
      if (gate.targets[0] == gate.targets[1]) throw std::invalid_argument("two-qubit gate on one qubit");
      const std::uint32_t ma = mask_of(gate.targets[0]);
      const std::uint32_t mb = mask_of(gate.targets[1]);
      const bool swaps = gate.kind != GateKind::kRZZ;
      const bool phases = gate.kind != GateKind::kSwap;
      const Complex even = std::polar(1.0, -gate.angle / 2);
      const Complex odd = std::polar(1.0, gate.angle / 2);
      MonomialOperator op;
      op.source.resize(dim);
      op.phase.resize(dim);
      for (std::size_t y = 0; y < dim; ++y) {
        auto s = static_cast<std::uint32_t>(y);
        const bool a = s & ma;
        const bool b = s & mb;
        if (swaps && a != b) s ^= (ma | mb);
        op.source[y] = s;
        // The ZZ phase is symmetric under the swap, so it can be read off y.
        op.phase[y] = phases ? (a == b ? even : odd) : Complex{1.0, 0.0};
      }
      return op;
    }
    default:
      break;
  }
  throw std::invalid_argument("gate " + std::string(gate_name(gate.kind)) + " is not monomial");
}

HybridState::HybridState(int n_qubits, std::vector<Complex> data)
    : n_qubits_(n_qubits),
      dim_(std::size_t{1} << n_qubits),
      data_(std::move(data)),
      scratch_(dim_ * dim_) {}

HybridState HybridState::plus_state(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::length_error("qubit count must be in [1, " + std::to_string(kMaxQubits) + "]");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  return HybridState(n_qubits, std::vector<Complex>(dim * dim, 1.0 / static_cast<double>(dim)));
}

HybridState HybridState::from_density(int n_qubits, std::vector<Complex> rho) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::length_error("qubit count must be in [1, " + std::to_string(kMaxQubits) + "]");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (rho.size() != dim * dim) throw std::invalid_argument("density matrix has the wrong size");
  return HybridState(n_qubits, std::move(rho));
}

bool HybridState::has_fluctuator(int id) const {
  return std::find(fluctuators_.begin(), fluctuators_.end(), id) != fluctuators_.end();
}

int HybridState::fluctuator_bit(int id) const {
  const auto it = std::find(fluctuators_.begin(), fluctuators_.end(), id);
  if (it == fluctuators_.end()) {
    throw std::out_of_range("unknown fluctuator " + std::to_string(id));
  }
  return static_cast<int>(it - fluctuators_.begin());
}

std::span<Complex> HybridState::block(std::size_t config) {
  if (config >= num_blocks()) throw std::out_of_range("block configuration out of range");
  return {data_.data() + config * block_size(), block_size()};
}

std::span<const Complex> HybridState::block(std::size_t config) const {
  if (config >= num_blocks()) throw std::out_of_range("block configuration out of range");
  return {data_.data() + config * block_size(), block_size()};
}

double HybridState::block_trace(std::size_t config) const {
  const auto b = block(config);
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += b[i * dim_ + i].real();
  return t;
}

double HybridState::trace() const {
  double t = 0.0;
  for (std::size_t c = 0; c < num_blocks(); ++c) t += block_trace(c);
  return t;
}

std::uint32_t HybridState::qubit_mask(int qubit) const {
  return std::uint32_t{1} << (n_qubits_ - 1 - qubit);
}

void HybridState::check_qubit(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_) {
    throw std::out_of_range("qubit " + std::to_string(qubit) + " out of range for " +
                            std::to_string(n_qubits_) + " qubits");
  }
}

void HybridState::attach_fluctuator(int id, double p) {
  if (has_fluctuator(id)) throw std::invalid_argument("fluctuator " + std::to_string(id) + " already attached");
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("fluctuator excitation probability outside [0, 1]");
  if (2 * data_.size() > kMaxElements) throw std::length_error("hybrid state would exceed the memory cap");
  const std::size_t half = data_.size();
  data_.resize(2 * half);
  for (std::size_t i = 0; i < half; ++i) {
    data_[half + i] = rmul(p, data_[i]);
    data_[i] = rmul(1.0 - p, data_[i]);
  }
  fluctuators_.push_back(id);
}

void HybridState::trace_out_fluctuator(int id) {
  const int k = fluctuator_bit(id);
  const std::size_t bs = block_size();
  const std::size_t new_blocks = num_blocks() / 2;
  const std::size_t low_mask = (std::size_t{1} << k) - 1;
  std::vector<Complex> out(new_blocks * bs);
  for (std::size_t c = 0; c < new_blocks; ++c) {
    const std::size_t c0 = ((c & ~low_mask) << 1) | (c & low_mask);
    const std::size_t c1 = c0 | (std::size_t{1} << k);
    const Complex* a = data_.data() + c0 * bs;
    const Complex* b = data_.data() + c1 * bs;
    Complex* o = out.data() + c * bs;
    for (std::size_t e = 0; e < bs; ++e) o[e] = a[e] + b[e];
  }
  data_ = std::move(out);
  fluctuators_.erase(fluctuators_.begin() + k);
}

void HybridState::block_monomial(Complex* rho, const MonomialOperator& op) {
  const std::size_t dim = dim_;
  if (op.is_diagonal()) {
    for (std::size_t y = 0; y < dim; ++y) {
      const Complex py = op.phase[y];
      Complex* row = rho + y * dim;
      for (std::size_t z = 0; z < dim; ++z) row[z] = cmul(cmul(py, std::conj(op.phase[z])), row[z]);
    }
    return;
  }
  Complex* out = scratch_.data();
  const std::uint32_t* src = op.source.data();
  for (std::size_t y = 0; y < dim; ++y) {
    const Complex* row = rho + static_cast<std::size_t>(src[y]) * dim;
    const Complex py = op.phase[y];
    Complex* o = out + y * dim;
    for (std::size_t z = 0; z < dim; ++z) o[z] = cmul(cmul(py, std::conj(op.phase[z])), row[src[z]]);
  }
  std::memcpy(static_cast<void*>(rho), out, dim * dim * sizeof(Complex));
}

void HybridState::block_pauli(Complex* rho, std::uint32_t flip, std::uint32_t sign) const {
  const std::size_t dim = dim_;
  double sg[std::size_t{1} << kMaxQubits];
  for (std::size_t y = 0; y < dim; ++y) sg[y] = (std::popcount(y & sign) & 1) ? -1.0 : 1.0;
  if (flip == 0) {
    for (std::size_t y = 0; y < dim; ++y) {
      Complex* row = rho + y * dim;
      for (std::size_t z = 0; z < dim; ++z) row[z] = rmul(sg[y] * sg[z], row[z]);
    }
    return;
  }
  // Swap (y, z) with (y ^ flip, z ^ flip); both pick up the same sign.
  const std::uint32_t top = std::bit_floor(flip);
  for (std::size_t y = 0; y < dim; ++y) {
    if (y & top) continue;
    Complex* r0 = rho + y * dim;
    Complex* r1 = rho + (y ^ flip) * dim;
    for (std::size_t z = 0; z < dim; ++z) {
      const std::size_t zf = z ^ flip;
      const double s = sg[y] * sg[z];
      const Complex a = r0[z];
      r0[z] = rmul(s, r1[zf]);
      r1[zf] = rmul(s, a);
    }
  }
}

void HybridState::apply_diagonal(std::span<const Complex> d) {
  if (d.size() != dim_) throw std::invalid_argument("diagonal operator dimension mismatch");
  std::vector<Complex> outer(block_size());
  for (std::size_t y = 0; y < dim_; ++y) {
    for (std::size_t z = 0; z < dim_; ++z) outer[y * dim_ + z] = cmul(d[y], std::conj(d[z]));
  }
  const std::size_t bs = block_size();
  const double* w = reinterpret_cast<const double*>(outer.data());
  for (std::size_t c = 0; c < num_blocks(); ++c) {
    double* rho = reinterpret_cast<double*>(data_.data() + c * bs);
    for (std::size_t e = 0; e < bs; ++e) {
      const double wr = w[2 * e], wi = w[2 * e + 1];
      const double xr = rho[2 * e], xi = rho[2 * e + 1];
      rho[2 * e] = wr * xr - wi * xi;
      rho[2 * e + 1] = wr * xi + wi * xr;
    }
  }
}

void HybridState::block_single_qubit(Complex* rho, std::uint32_t mask, const Matrix2c& u) const {
  const std::size_t dim = dim_;
  const Complex u00 = u[0][0], u01 = u[0][1], u10 = u[1][0], u11 = u[1][1];
  // rho <- U rho
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & mask) continue;
    Complex* r0 = rho + i * dim;
    Complex* r1 = rho + (i | mask) * dim;
    for (std::size_t j = 0; j < dim; ++j) {
      const Complex x = r0[j];
      const Complex y = r1[j];
      r0[j] = cmul(u00, x) + cmul(u01, y);
      r1[j] = cmul(u10, x) + cmul(u11, y);
    }
  }
  // rho <- rho U^dagger
  const Complex c00 = std::conj(u00), c01 = std::conj(u01), c10 = std::conj(u10), c11 = std::conj(u11);
  const std::size_t stride = 2 * static_cast<std::size_t>(mask);
  for (std::size_t i = 0; i < dim; ++i) {
    Complex* row = rho + i * dim;
    for (std::size_t hi = 0; hi < dim; hi += stride) {
      Complex* r0 = row + hi;
      Complex* r1 = row + hi + mask;
      for (std::size_t lo = 0; lo < mask; ++lo) {
        const Complex x = r0[lo];
        const Complex y = r1[lo];
        r0[lo] = cmul(x, c00) + cmul(y, c01);
        r1[lo] = cmul(x, c10) + cmul(y, c11);
      }
    }
  }
}

void HybridState::block_dense(Complex* rho, std::span<const int> targets, std::span<const Complex> u) {
  const std::size_t dim = dim_;
  const std::size_t k = targets.size();
  const std::size_t local = std::size_t{1} << k;
  std::vector<std::uint32_t> masks(k);
  std::uint32_t all = 0;
  for (std::size_t t = 0; t < k; ++t) {
    masks[t] = qubit_mask(targets[t]);
    all |= masks[t];
  }
  // offsets[l]: global index bits for local index l (targets[0] is the MSB).
  std::vector<std::uint32_t> offsets(local, 0);
  for (std::size_t l = 0; l < local; ++l) {
    for (std::size_t t = 0; t < k; ++t) {
      if (l & (std::size_t{1} << (k - 1 - t))) offsets[l] |= masks[t];
    }
  }
  std::vector<Complex> in(local), out(local);
  // rho <- U rho, column by column
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & all) continue;
    for (std::size_t col = 0; col < dim; ++col) {
      for (std::size_t l = 0; l < local; ++l) in[l] = rho[(base | offsets[l]) * dim + col];
      for (std::size_t a = 0; a < local; ++a) {
        Complex acc = 0.0;
        for (std::size_t b = 0; b < local; ++b) acc += cmul(u[a * local + b], in[b]);
        out[a] = acc;
      }
      for (std::size_t l = 0; l < local; ++l) rho[(base | offsets[l]) * dim + col] = out[l];
    }
  }
  // rho <- rho U^dagger, row by row
  for (std::size_t row = 0; row < dim; ++row) {
    Complex* r = rho + row * dim;
    for (std::size_t base = 0; base < dim; ++base) {
      if (base & all) continue;
      for (std::size_t l = 0; l < local; ++l) in[l] = r[base | offsets[l]];
      for (std::size_t a = 0; a < local; ++a) {
        Complex acc = 0.0;
        for (std::size_t b = 0; b < local; ++b) acc += cmul(in[b], std::conj(u[a * local + b]));
        out[a] = acc;
      }
      for (std::size_t l = 0; l < local; ++l) r[base | offsets[l]] = out[l];
    }
  }
}

void HybridState::apply_unitary(const QubitGate& gate) { apply_gates(std::span(&gate, 1)); }

void HybridState::apply_gates(std::span<const QubitGate> gates) {
  struct Step {
    bool monomial = false;
    MonomialOperator op;
    std::vector<Complex> phase2;
    const QubitGate* gate = nullptr;
    std::vector<Complex> matrix;
  };
  std::vector<Step> steps;
  for (const QubitGate& g : gates) {
    for (int t : g.targets) check_qubit(t);
    for (std::size_t a = 0; a < g.targets.size(); ++a) {
      for (std::size_t b = a + 1; b < g.targets.size(); ++b) {
        if (g.targets[a] == g.targets[b]) throw std::invalid_argument("gate targets repeat a qubit");
      }
    }
    if (g.kind == GateKind::kUnitary && g.matrix.size() != (std::size_t{1} << (2 * g.targets.size()))) {
      throw std::invalid_argument("unitary matrix size does not match its target count");
    }
    if (gate_is_monomial(g)) {
      MonomialOperator op = monomial_for(g, n_qubits_);
      if (!steps.empty() && steps.back().monomial) {
        steps.back().op = MonomialOperator::compose(op, steps.back().op);
      } else {
        steps.push_back({true, std::move(op), {}, nullptr, {}});
      }
    } else {
      steps.push_back({false, {}, {}, &g, gate_matrix(g)});
    }
  }
  for (Step& s : steps) {
    if (s.monomial && !s.op.is_diagonal()) s.phase2 = outer_phase(s.op);
  }
  const std::size_t bs = block_size();
  for (std::size_t c = 0; c < num_blocks(); ++c) {
    Complex* rho = data_.data() + c * bs;
    for (const Step& s : steps) {
      if (s.monomial) {
        if (s.phase2.empty()) {
          block_monomial(rho, s.op);
        } else {
          gather_with_phase(rho, scratch_.data(), s.op, s.phase2.data(), dim_);
          std::memcpy(static_cast<void*>(rho), scratch_.data(), bs * sizeof(Complex));
        }
        continue;
      }
      const QubitGate& g = *s.gate;
      const std::vector<Complex>& m = s.matrix;
      if (g.arity() == 1) {
        block_single_qubit(rho, qubit_mask(g.targets[0]), {{{m[0], m[1]}, {m[2], m[3]}}});
      } else {
        block_dense(rho, g.targets, m);
      }
    }
  }
}

void HybridState::apply_monomial(const MonomialOperator& op) {
  if (op.source.size() != dim_ || op.phase.size() != dim_) {
    throw std::invalid_argument("monomial operator dimension mismatch");
  }
  const std::size_t bs = block_size();
  if (op.is_diagonal()) {
    for (std::size_t c = 0; c < num_blocks(); ++c) block_monomial(data_.data() + c * bs, op);
    return;
  }
  const std::vector<Complex> phase2 = outer_phase(op);
  for (std::size_t c = 0; c < num_blocks(); ++c) {
    Complex* rho = data_.data() + c * bs;
    gather_with_phase(rho, scratch_.data(), op, phase2.data(), dim_);
    std::memcpy(static_cast<void*>(rho), scratch_.data(), bs * sizeof(Complex));
  }
}

void HybridState::apply_single_qubit(int qubit, const Matrix2c& u) {
  check_qubit(qubit);
  const std::uint32_t mask = qubit_mask(qubit);
  const std::size_t bs = block_size();
  for (std::size_t c = 0; c < num_blocks(); ++c) block_single_qubit(data_.data() + c * bs, mask, u);
}

void HybridState::apply_classical_transition(int id, const Matrix2& t) {
  const int k = fluctuator_bit(id);
  if (is_identity(t)) return;
  const std::size_t bit = std::size_t{1} << k;
  const std::size_t bs = block_size();
  for (std::size_t c = 0; c < num_blocks(); ++c) {
    if (c & bit) continue;
    mix_pair(reinterpret_cast<double*>(data_.data() + c * bs),
             reinterpret_cast<double*>(data_.data() + (c | bit) * bs), 2 * bs, t);
  }
}

void HybridState::apply_controlled_error(int id, int qubit, const Matrix2c& v) {
  const int k = fluctuator_bit(id);
  check_qubit(qubit);
  const std::size_t bit = std::size_t{1} << k;
  const std::size_t bs = block_size();
  if (const PauliAction pa = pauli_action(v); pa.ok) {
    const std::uint32_t mask = qubit_mask(qubit);
    for (std::size_t c = 0; c < num_blocks(); ++c) {
      if (c & bit) block_pauli(data_.data() + c * bs, pa.flip ? mask : 0, pa.sign ? mask : 0);
    }
    return;
  }
  if (is_monomial(v)) {
    const MonomialOperator op = monomial_for(qubit, v, n_qubits_);
    for (std::size_t c = 0; c < num_blocks(); ++c) {
      if (c & bit) block_monomial(data_.data() + c * bs, op);
    }
    return;
  }
  const std::uint32_t mask = qubit_mask(qubit);
  for (std::size_t c = 0; c < num_blocks(); ++c) {
    if (c & bit) block_single_qubit(data_.data() + c * bs, mask, v);
  }
}

void HybridState::apply_interactions(std::span<const Interaction> batch) {
  std::vector<int> bits;
  bool distinct = true;
  std::uint64_t qubits_seen = 0;
  for (const Interaction& it : batch) {
    const int k = fluctuator_bit(it.fluctuator);
    check_qubit(it.qubit);
    if (std::find(bits.begin(), bits.end(), k) != bits.end()) distinct = false;
    if (qubits_seen & (std::uint64_t{1} << it.qubit)) distinct = false;
    qubits_seen |= std::uint64_t{1} << it.qubit;
    bits.push_back(k);
  }
  if (!distinct) {
    for (const Interaction& it : batch) {
      apply_classical_transition(it.fluctuator, it.transition);
      apply_controlled_error(it.fluctuator, it.qubit, it.error);
    }
    return;
  }
  // With distinct fluctuators and qubits, every transition commutes with
  // every other interaction's error, so all transitions can run first.
  const std::size_t bs = block_size();
  const std::size_t nb = num_blocks();
  std::vector<std::size_t> mixing;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    if (!is_identity(batch[i].transition)) mixing.push_back(i);
  }
  if (!mixing.empty()) {
    for (std::size_t e0 = 0; e0 < bs; e0 += kTile) {
      const std::size_t len = std::min(kTile, bs - e0);
      for (std::size_t i : mixing) {
        const std::size_t bit = std::size_t{1} << bits[i];
        for (std::size_t c = 0; c < nb; ++c) {
          if (c & bit) continue;
          mix_pair(reinterpret_cast<double*>(data_.data() + c * bs + e0),
                   reinterpret_cast<double*>(data_.data() + (c | bit) * bs + e0), 2 * len,
                   batch[i].transition);
        }
      }
    }
  }

  // Every block then sees the product of the errors whose fluctuator is
  // excited in it.
  std::vector<PauliAction> pauli;
  bool all_pauli = true;
  for (const Interaction& it : batch) {
    pauli.push_back(pauli_action(it.error));
    all_pauli = all_pauli && pauli.back().ok;
  }
  if (all_pauli) {
    for (std::size_t c = 0; c < nb; ++c) {
      std::uint32_t flip = 0;
      std::uint32_t sign = 0;
      for (std::size_t i = 0; i < batch.size(); ++i) {
        if (!(c & (std::size_t{1} << bits[i]))) continue;
        const std::uint32_t mask = qubit_mask(batch[i].qubit);
        if (pauli[i].flip) flip |= mask;
        if (pauli[i].sign) sign |= mask;
      }
      if (flip | sign) block_pauli(data_.data() + c * bs, flip, sign);
    }
    return;
  }
  bool all_monomial = true;
  for (const Interaction& it : batch) all_monomial = all_monomial && is_monomial(it.error);
  if (all_monomial) {
    std::vector<MonomialOperator> single;
    single.reserve(batch.size());
    for (const Interaction& it : batch) single.push_back(monomial_for(it.qubit, it.error, n_qubits_));
    for (std::size_t c = 0; c < nb; ++c) {
      MonomialOperator word;
      bool any = false;
      for (std::size_t i = 0; i < batch.size(); ++i) {
        if (!(c & (std::size_t{1} << bits[i]))) continue;
        word = any ? MonomialOperator::compose(single[i], word) : single[i];
        any = true;
      }
      if (any) block_monomial(data_.data() + c * bs, word);
    }
    return;
  }
  for (std::size_t c = 0; c < nb; ++c) {
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (c & (std::size_t{1} << bits[i])) {
        block_single_qubit(data_.data() + c * bs, qubit_mask(batch[i].qubit), batch[i].error);
      }
    }
  }
}

double HybridState::expectation(std::span<const double> diag) const {
  if (diag.size() != dim_) throw std::invalid_argument("observable dimension mismatch");
  double re = 0.0;
  double im = 0.0;
  for (std::size_t c = 0; c < num_blocks(); ++c) {
    const Complex* rho = data_.data() + c * block_size();
    for (std::size_t z = 0; z < dim_; ++z) {
      re += diag[z] * rho[z * dim_ + z].real();
      im += diag[z] * rho[z * dim_ + z].imag();
    }
  }
  if (std::abs(im) > 1e-10) {
    throw std::runtime_error("expectation has imaginary residue " + std::to_string(im));
  }
  return re;
}

std::vector<Complex> HybridState::reduced_density() const {
  std::vector<Complex> out(block_size(), 0.0);
  for (std::size_t c = 0; c < num_blocks(); ++c) {
    const Complex* rho = data_.data() + c * block_size();
    for (std::size_t e = 0; e < out.size(); ++e) out[e] += rho[e];
  }
  return out;
}

Diagnostics HybridState::validate() const {
  using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Diagnostics d;
  d.min_eigenvalue = std::numeric_limits<double>::infinity();
  double total = 0.0;
  const auto n = static_cast<Eigen::Index>(dim_);
  for (std::size_t c = 0; c < num_blocks(); ++c) {
    const Eigen::Map<const RowMajor> rho(data_.data() + c * block_size(), n, n);
    d.block_traces.push_back(rho.trace().real());
    total += d.block_traces.back();
    d.hermiticity_deviation =
        std::max(d.hermiticity_deviation, (rho - rho.adjoint()).cwiseAbs().maxCoeff());
    const Eigen::MatrixXcd herm = 0.5 * (rho + rho.adjoint());
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
    d.block_min_eigenvalues.push_back(solver.eigenvalues().minCoeff());
    d.min_eigenvalue = std::min(d.min_eigenvalue, d.block_min_eigenvalues.back());
  }
  d.trace_deviation = std::abs(total - 1.0);
  return d;
}

}  // namespace corrqaoa
