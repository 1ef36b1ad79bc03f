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

#include "corrqaoa/pauli_state.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace corrqaoa {
namespace {

constexpr std::size_t kTile = 64;  // doubles per block and tile when mixing

int popcount(std::uint32_t v) { return std::popcount(v); }

// Exponent k (mod 4) in P(x1, z1) P(x2, z2) = i^k P(x1 ^ x2, z1 ^ z2).
int product_phase(std::uint32_t x1, std::uint32_t z1, std::uint32_t x2, std::uint32_t z2) {
  const int k = popcount(x1 & z1) + popcount(x2 & z2) + 2 * popcount(z1 & x2) -
                popcount((x1 ^ x2) & (z1 ^ z2));
  return ((k % 4) + 4) % 4;
}

bool is_identity(const Matrix2& t) {
  return t[0][0] == 1.0 && t[0][1] == 0.0 && t[1][0] == 0.0 && t[1][1] == 1.0;
}

// Compact position of a parity-even string: x, then z without its last bit
// (which the parity fixes).
std::uint32_t compact_index(std::uint32_t s, int n) {
  const std::uint32_t x = s >> n;
  const std::uint32_t z = s & ((std::uint32_t{1} << n) - 1);
  return (x << (n - 1)) | (z >> 1);
}

std::uint32_t expand_index(std::uint32_t c, int n) {
  const std::uint32_t low = c & ((std::uint32_t{1} << (n - 1)) - 1);
  const std::uint32_t z = (low << 1) | static_cast<std::uint32_t>(popcount(low) & 1);
  return ((c >> (n - 1)) << n) | z;
}

// Stored strings that anticommute with a rotation generator, paired as
// (lo, hi) with -i G P_lo = P_hi and -i G P_hi = -P_lo, so that
//   r'(lo) = c r(lo) - s r(hi),  r'(hi) = c r(hi) + s r(lo).
struct RotationPairs {
  std::vector<std::uint32_t> lo;
  std::vector<std::uint32_t> hi;
};

std::shared_ptr<const RotationPairs> build_pairs(std::uint32_t generator, int n) {
  const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
  const std::uint32_t gx = generator >> n;
  const std::uint32_t gz = generator & mask;
  const std::uint32_t count = std::uint32_t{1} << (2 * n - 1);
  auto pairs = std::make_shared<RotationPairs>();
  for (std::uint32_t c = 0; c < count; ++c) {
    const std::uint32_t s = expand_index(c, n);
    const std::uint32_t x = s >> n;
    const std::uint32_t z = s & mask;
    if (!((popcount(x & gz) + popcount(z & gx)) & 1)) continue;
    const std::uint32_t t = s ^ generator;
    if (t < s) continue;
    // -i G P_s = i^{k-1} P_t with G P_s = i^k P_t; the power is 0 or 2.
    const bool plus = (product_phase(gx, gz, x, z) + 3) % 4 == 0;
    pairs->lo.push_back(compact_index(plus ? s : t, n));
    pairs->hi.push_back(compact_index(plus ? t : s, n));
  }
  return pairs;
}

const RotationPairs& rotation_pairs(std::uint32_t generator, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, std::uint32_t>, std::shared_ptr<const RotationPairs>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, generator}];
  if (!slot) slot = build_pairs(generator, n);
  return *slot;
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

void check_qubits(int n_qubits) {
  if (n_qubits < 1 || n_qubits > PauliHybridState::kMaxPauliQubits) {
    throw std::length_error("Pauli-basis state supports 1 to " +
                            std::to_string(PauliHybridState::kMaxPauliQubits) + " qubits");
  }
}

}  // namespace

std::uint32_t zz_index(int a, int b, int n) {
  const std::uint32_t z = (std::uint32_t{1} << (n - 1 - a)) | (std::uint32_t{1} << (n - 1 - b));
  return pauli_index(0, z, n);
}

std::vector<Complex> pauli_string_matrix(std::uint32_t s, int n) {
  const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
  const std::uint32_t x = s >> n;
  const std::uint32_t z = s & mask;
  const std::size_t dim = std::size_t{1} << n;
  static constexpr Complex kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex phase = kPowers[popcount(x & z) % 4];
  std::vector<Complex> m(dim * dim, 0.0);
  for (std::uint32_t col = 0; col < dim; ++col) {
    const double sign = (popcount(z & col) & 1) ? -1.0 : 1.0;
    m[(col ^ x) * dim + col] = phase * sign;
  }
  return m;
}

PauliHybridState::PauliHybridState(int n_qubits, std::vector<double> data)
    : n_qubits_(n_qubits), coeffs_(std::size_t{1} << (2 * n_qubits - 1)), data_(std::move(data)) {}

std::uint32_t PauliHybridState::compact(std::uint32_t s) const { return compact_index(s, n_qubits_); }
std::uint32_t PauliHybridState::expand(std::uint32_t c) const { return expand_index(c, n_qubits_); }

void PauliHybridState::check_string(std::uint32_t s) const {
  if (s >= (std::uint32_t{1} << (2 * n_qubits_))) {
    throw std::out_of_range("not a Pauli string on " + std::to_string(n_qubits_) + " qubits");
  }
}

PauliHybridState PauliHybridState::plus_state(int n_qubits) {
  check_qubits(n_qubits);
  std::vector<double> data(std::size_t{1} << (2 * n_qubits - 1), 0.0);
  // tr(|+><+| X^x) = 1 for every x; any Z component gives 0.
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << n_qubits); ++x) {
    data[compact_index(pauli_index(x, 0, n_qubits), n_qubits)] = 1.0;
  }
  return PauliHybridState(n_qubits, std::move(data));
}

PauliHybridState PauliHybridState::from_density(int n_qubits, std::span<const Complex> rho) {
  check_qubits(n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (rho.size() != dim * dim) throw std::invalid_argument("density matrix has the wrong size");
  std::vector<double> data(dim * dim / 2);
  double scale = 0.0;
  for (const Complex& v : rho) scale = std::max(scale, std::abs(v));
  for (std::uint32_t s = 0; s < dim * dim; ++s) {
    const std::vector<Complex> p = pauli_string_matrix(s, n_qubits);
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) t += rho[i * dim + j] * p[j * dim + i];
    }
    if (is_parity_even(s, n_qubits)) {
      data[compact_index(s, n_qubits)] = t.real();
    } else if (std::abs(t) > 1e-12 * std::max(1.0, scale) * static_cast<double>(dim)) {
      throw std::invalid_argument("density matrix does not commute with the global X parity");
    }
  }
  return PauliHybridState(n_qubits, std::move(data));
}

bool PauliHybridState::has_fluctuator(int id) const {
  return std::find(fluctuators_.begin(), fluctuators_.end(), id) != fluctuators_.end();
}

int PauliHybridState::fluctuator_bit(int id) const {
  const auto it = std::find(fluctuators_.begin(), fluctuators_.end(), id);
  if (it == fluctuators_.end()) throw std::out_of_range("unknown fluctuator " + std::to_string(id));
  return static_cast<int>(it - fluctuators_.begin());
}

void PauliHybridState::check_qubit(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_) {
    throw std::out_of_range("qubit " + std::to_string(qubit) + " out of range for " +
                            std::to_string(n_qubits_) + " qubits");
  }
}

double PauliHybridState::coefficient(std::size_t config, std::uint32_t string) const {
  if (config >= num_blocks()) throw std::out_of_range("block configuration out of range");
  check_string(string);
  if (!is_parity_even(string, n_qubits_)) return 0.0;
  return data_[config * coeffs_ + compact(string)];
}

double PauliHybridState::trace() const {
  double t = 0.0;
  for (std::size_t c = 0; c < num_blocks(); ++c) t += data_[c * coeffs_];
  return t;
}

void PauliHybridState::attach_fluctuator(int id, double p) {
  if (has_fluctuator(id)) throw std::invalid_argument("fluctuator " + std::to_string(id) + " already attached");
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("fluctuator excitation probability outside [0, 1]");
  if (fluctuators_.size() >= 20) throw std::length_error("too many live fluctuators");
  const std::size_t half = data_.size();
  data_.resize(2 * half);
  for (std::size_t i = 0; i < half; ++i) {
    data_[half + i] = p * data_[i];
    data_[i] = (1.0 - p) * data_[i];
  }
  fluctuators_.push_back(id);
}

void PauliHybridState::trace_out_fluctuator(int id) {
  const int k = fluctuator_bit(id);
  const std::size_t bs = coeffs_;
  const std::size_t new_blocks = num_blocks() / 2;
  const std::size_t low_mask = (std::size_t{1} << k) - 1;
  std::vector<double> out(new_blocks * bs);
  for (std::size_t c = 0; c < new_blocks; ++c) {
    const std::size_t c0 = ((c & ~low_mask) << 1) | (c & low_mask);
    const std::size_t c1 = c0 | (std::size_t{1} << k);
    const double* a = data_.data() + c0 * bs;
    const double* b = data_.data() + c1 * bs;
    double* o = out.data() + c * bs;
    for (std::size_t e = 0; e < bs; ++e) o[e] = a[e] + b[e];
  }
  data_ = std::move(out);
  fluctuators_.erase(fluctuators_.begin() + k);
}

void PauliHybridState::apply_rotation(std::uint32_t generator, double angle) {
  const PauliRotation r{generator, angle};
  apply_rotations({&r, 1});
}

void PauliHybridState::apply_rotations(std::span<const PauliRotation> rotations) {
  struct Prepared {
    const RotationPairs* pairs;
    double c;
    double s;
  };
  std::vector<Prepared> prepared;
  prepared.reserve(rotations.size());
  for (const PauliRotation& rot : rotations) {
    check_string(rot.generator);
    if (!is_parity_even(rot.generator, n_qubits_)) {
      throw std::invalid_argument("rotation generator anticommutes with the global X parity");
    }
    if (rot.generator == 0) continue;
    // U P U^dagger = cos P + sin (-i G P) for every P anticommuting with G.
    prepared.push_back({&rotation_pairs(rot.generator, n_qubits_), std::cos(rot.angle), std::sin(rot.angle)});
  }
  for (std::size_t b = 0; b < num_blocks(); ++b) {
    double* r = data_.data() + b * coeffs_;
    for (const Prepared& p : prepared) {
      const std::uint32_t* lo = p.pairs->lo.data();
      const std::uint32_t* hi = p.pairs->hi.data();
      const std::size_t count = p.pairs->lo.size();
      const double c = p.c;
      const double sn = p.s;
      // lo and hi are disjoint.
#pragma GCC ivdep
      for (std::size_t i = 0; i < count; ++i) {
        const double u = r[lo[i]];
        const double v = r[hi[i]];
        r[lo[i]] = c * u - sn * v;
        r[hi[i]] = c * v + sn * u;
      }
    }
  }
}

void PauliHybridState::apply_zz_rotation(int a, int b, double angle) {
  check_qubit(a);
  check_qubit(b);
  if (a == b) throw std::invalid_argument("ZZ rotation needs two distinct qubits");
  apply_rotation(zz_index(a, b, n_qubits_), angle);
}

void PauliHybridState::apply_x_rotation(int q, double angle) {
  check_qubit(q);
  apply_rotation(pauli_index(qubit_bit(q), 0, n_qubits_), angle);
}

const std::vector<double>& PauliHybridState::anticommute_signs(std::uint32_t string) const {
  static std::mutex mu;
  static std::map<std::pair<int, std::uint32_t>, std::shared_ptr<const std::vector<double>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n_qubits_, string}];
  if (!slot) {
    // P_s picks up a sign iff it anticommutes with the applied string.
    const int n = n_qubits_;
    const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
    const std::uint32_t probe = ((string & mask) << n) | (string >> n);
    auto sign = std::make_shared<std::vector<double>>(coeffs_);
    for (std::uint32_t c = 0; c < coeffs_; ++c) (*sign)[c] = (popcount(expand(c) & probe) & 1) ? -1.0 : 1.0;
    slot = std::move(sign);
  }
  return *slot;
}

void PauliHybridState::apply_pauli(std::uint32_t string) {
  check_string(string);
  const std::vector<double>& sign = anticommute_signs(string);
  for (std::size_t b = 0; b < num_blocks(); ++b) {
    double* r = data_.data() + b * coeffs_;
    for (std::size_t c = 0; c < coeffs_; ++c) r[c] *= sign[c];
  }
}

std::uint32_t PauliHybridState::error_string(int qubit, const Matrix2c& v) const {
  check_qubit(qubit);
  const PauliAction pa = pauli_action(v);
  if (!pa.ok) throw std::invalid_argument("error operator is not a Pauli matrix");
  const std::uint32_t bit = qubit_bit(qubit);
  return pauli_index(pa.flip ? bit : 0, pa.sign ? bit : 0, n_qubits_);
}

void PauliHybridState::apply_classical_transition(int id, const Matrix2& t) {
  const int k = fluctuator_bit(id);
  if (is_identity(t)) return;
  const std::size_t bit = std::size_t{1} << k;
  for (std::size_t c = 0; c < num_blocks(); ++c) {
    if (c & bit) continue;
    mix_pair(data_.data() + c * coeffs_, data_.data() + (c | bit) * coeffs_, coeffs_, t);
  }
}

void PauliHybridState::apply_controlled_error(int id, int qubit, const Matrix2c& v) {
  const int k = fluctuator_bit(id);
  const std::vector<double>& sign = anticommute_signs(error_string(qubit, v));
  const std::size_t bit = std::size_t{1} << k;
  for (std::size_t b = 0; b < num_blocks(); ++b) {
    if (!(b & bit)) continue;
    double* r = data_.data() + b * coeffs_;
    for (std::size_t c = 0; c < coeffs_; ++c) r[c] *= sign[c];
  }
}

void PauliHybridState::apply_interactions(std::span<const Interaction> batch) {
  std::vector<int> bits;
  std::vector<std::uint32_t> strings;
  bool distinct = true;
  std::uint64_t qubits_seen = 0;
  for (const Interaction& it : batch) {
    const int k = fluctuator_bit(it.fluctuator);
    strings.push_back(error_string(it.qubit, it.error));
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
  // Interactions on distinct fluctuators and qubits commute, and each one
  // acts per string: mix the block pair along its bit, then flip the sign
  // of the excited half where the string anticommutes with the error.
  const std::size_t nb = num_blocks();
  const std::size_t bs = coeffs_;
  std::vector<const double*> eps;
  eps.reserve(batch.size());
  for (std::uint32_t s : strings) eps.push_back(anticommute_signs(s).data());
  for (std::size_t e0 = 0; e0 < bs; e0 += kTile) {
    const std::size_t len = std::min(kTile, bs - e0);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const std::size_t bit = std::size_t{1} << bits[i];
      const Matrix2& t = batch[i].transition;
      const double t00 = t[0][0], t01 = t[0][1], t10 = t[1][0], t11 = t[1][1];
      const double* sg = eps[i] + e0;
      const bool still = is_identity(t);
      for (std::size_t c = 0; c < nb; ++c) {
        if (c & bit) continue;
        double* a = data_.data() + c * bs + e0;
        double* b = data_.data() + (c | bit) * bs + e0;
        if (still) {
          for (std::size_t e = 0; e < len; ++e) b[e] *= sg[e];
          continue;
        }
        for (std::size_t e = 0; e < len; ++e) {
          const double x = a[e];
          const double y = b[e];
          a[e] = t00 * x + t01 * y;
          b[e] = sg[e] * (t10 * x + t11 * y);
        }
      }
    }
  }
}

double PauliHybridState::expectation(std::span<const PauliTerm> terms) const {
  double total = 0.0;
  for (const PauliTerm& t : terms) {
    check_string(t.string);
    if (!is_parity_even(t.string, n_qubits_)) continue;
    const std::uint32_t c = compact(t.string);
    double sum = 0.0;
    for (std::size_t b = 0; b < num_blocks(); ++b) sum += data_[b * coeffs_ + c];
    total += t.weight * sum;
  }
  return total;
}

std::vector<Complex> PauliHybridState::block_density(std::size_t config) const {
  if (config >= num_blocks()) throw std::out_of_range("block configuration out of range");
  const double* r = data_.data() + config * coeffs_;
  const std::size_t dim = std::size_t{1} << n_qubits_;
  std::vector<Complex> rho(dim * dim, 0.0);
  const double norm = 1.0 / static_cast<double>(dim);
  for (std::uint32_t c = 0; c < coeffs_; ++c) {
    if (r[c] == 0.0) continue;
    const std::vector<Complex> p = pauli_string_matrix(expand(c), n_qubits_);
    for (std::size_t e = 0; e < rho.size(); ++e) rho[e] += norm * r[c] * p[e];
  }
  return rho;
}

std::vector<Complex> PauliHybridState::reduced_density() const {
  const std::size_t dim = std::size_t{1} << n_qubits_;
  std::vector<Complex> out(dim * dim, 0.0);
  for (std::size_t c = 0; c < num_blocks(); ++c) {
    const std::vector<Complex> b = block_density(c);
    for (std::size_t e = 0; e < out.size(); ++e) out[e] += b[e];
  }
  return out;
}

}  // namespace corrqaoa
