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

#include "corrqaoa/sk_instance.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace corrqaoa {
namespace {

std::size_t pair_index(int i, int j, int n) {
  // Offset of row i in the row-major upper triangle, then the column.
  return static_cast<std::size_t>(i * (2 * n - i - 1) / 2 + (j - i - 1));
}

}  // namespace

SkInstance::SkInstance(int n, std::vector<int> weights) : n_(n), weights_(std::move(weights)) {
  if (n < 2) throw std::invalid_argument("SK instance needs at least 2 vertices");
  if (weights_.size() != static_cast<std::size_t>(n) * (n - 1) / 2) {
    throw std::invalid_argument("SK instance on " + std::to_string(n) + " vertices needs " +
                                std::to_string(n * (n - 1) / 2) + " weights, got " +
                                std::to_string(weights_.size()));
  }
  for (int w : weights_) {
    if (w != 1 && w != -1) throw std::invalid_argument("SK weights must be +1 or -1");
  }
}

int SkInstance::weight(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("no such edge");
  if (i > j) std::swap(i, j);
  return weights_[pair_index(i, j, n_)];
}

std::string SkInstance::to_string() const {
  std::string out;
  out.reserve(weights_.size());
  for (int w : weights_) out.push_back(w > 0 ? '+' : '-');
  return out;
}

SkInstance parse_instance(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.starts_with("w=")) text.remove_prefix(2);
  std::vector<int> weights;
  weights.reserve(text.size());
  for (char c : text) {
    if (c == '+') {
      weights.push_back(1);
    } else if (c == '-') {
      weights.push_back(-1);
    } else {
      throw std::invalid_argument(std::string("invalid character '") + c + "' in instance string");
    }
  }
  const std::size_t len = weights.size();
  int n = 2;
  while (static_cast<std::size_t>(n) * (n - 1) / 2 < len) ++n;
  if (len == 0 || static_cast<std::size_t>(n) * (n - 1) / 2 != len) {
    throw std::invalid_argument("instance string length " + std::to_string(len) +
                                " is not n(n-1)/2 for any integer n >= 2");
  }
  return SkInstance(n, std::move(weights));
}

SkInstance random_instance(int n, std::mt19937_64& rng) {
  if (n < 2) throw std::invalid_argument("SK instance needs n >= 2");
  std::vector<int> w(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int& v : w) v = (rng() >> 63) ? -1 : 1;
  return SkInstance(n, std::move(w));
}

int cost(const SkInstance& instance, std::span<const int> z) {
  const int n = instance.num_qubits();
  if (z.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("assignment size mismatch");
  int c = 0;
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) c += instance.weights()[k++] * z[i] * z[j];
  }
  return c;
}

std::vector<int> spins_of(std::uint32_t index, int n) {
  std::vector<int> z(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) z[q] = spin(index, q, n);
  return z;
}

BruteForceResult brute_force_optimum(const SkInstance& instance) {
  const int n = instance.num_qubits();
  if (n > kMaxBruteForceQubits) throw std::length_error("brute force limited to 24 vertices");
  BruteForceResult out;
  out.c_star = std::numeric_limits<int>::max();
  const DiagonalHamiltonian h = hamiltonian(instance);
  for (std::uint32_t idx = 0; idx < h.diag.size(); ++idx) {
    const int c = static_cast<int>(h.diag[idx]);
    if (c < out.c_star) {
      out.c_star = c;
      out.minimizers.clear();
    }
    if (c == out.c_star) out.minimizers.push_back(idx);
  }
  return out;
}

bool is_permutation(std::span<const int> permutation) {
  std::vector<bool> seen(permutation.size(), false);
  for (int v : permutation) {
    if (v < 0 || static_cast<std::size_t>(v) >= permutation.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<int> identity_permutation(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

std::vector<int> inverse_permutation(std::span<const int> permutation) {
  if (!is_permutation(permutation)) throw std::invalid_argument("not a permutation");
  std::vector<int> inv(permutation.size());
  for (std::size_t i = 0; i < permutation.size(); ++i) inv[permutation[i]] = static_cast<int>(i);
  return inv;
}

DiagonalHamiltonian hamiltonian(const SkInstance& instance, std::span<const int> permutation) {
  const int n = instance.num_qubits();
  if (permutation.size() != static_cast<std::size_t>(n) || !is_permutation(permutation)) {
    throw std::invalid_argument("invalid qubit permutation");
  }
  // Physical pair (i, j) carries the weight of the logical pair it holds.
  std::vector<int> w(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) w[i * n + j] = instance.weight(permutation[i], permutation[j]);
  }
  DiagonalHamiltonian h;
  h.diag.resize(std::size_t{1} << n);
  for (std::uint32_t idx = 0; idx < h.diag.size(); ++idx) {
    int c = 0;
    for (int i = 0; i < n; ++i) {
      const int zi = spin(idx, i, n);
      for (int j = i + 1; j < n; ++j) c += w[i * n + j] * zi * spin(idx, j, n);
    }
    h.diag[idx] = c;
  }
  return h;
}

DiagonalHamiltonian hamiltonian(const SkInstance& instance) {
  return hamiltonian(instance, identity_permutation(instance.num_qubits()));
}

}  // namespace corrqaoa
