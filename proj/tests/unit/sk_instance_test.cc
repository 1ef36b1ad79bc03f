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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace corrqaoa {
namespace {

TEST(SkInstance, ParseRoundTrip) {
  const SkInstance inst = parse_instance("w=+-++-+-++-----+");
  EXPECT_EQ(inst.num_qubits(), 6);
  EXPECT_EQ(inst.to_string(), "+-++-+-++-----+");
  EXPECT_EQ(parse_instance(inst.to_string()).weights(), inst.weights());
  // Row-major pairs: (0,1) (0,2) (0,3) (0,4) (0,5) (1,2) ...
  EXPECT_EQ(inst.weight(0, 1), 1);
  EXPECT_EQ(inst.weight(0, 2), -1);
  EXPECT_EQ(inst.weight(1, 2), 1);
  EXPECT_EQ(inst.weight(4, 5), 1);
  EXPECT_EQ(inst.weight(5, 4), inst.weight(4, 5));
}

TEST(SkInstance, ParseRejectsMalformed) {
  EXPECT_THROW(parse_instance("+-+x"), std::invalid_argument);
  EXPECT_THROW(parse_instance("+-++"), std::invalid_argument);
  EXPECT_THROW(parse_instance(""), std::invalid_argument);
}

TEST(SkInstance, TypicalInstanceHasFourMinima) {
  const BruteForceResult r = brute_force_optimum(parse_instance("+-++-+-++-----+"));
  EXPECT_EQ(r.c_star, -7);
  EXPECT_EQ(r.minimizers, (std::vector<std::uint32_t>{0b010000, 0b010110, 0b101001, 0b101111}));
}

TEST(SkInstance, BruteForceMatchesNaiveSearch) {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 8; ++n) {
    const SkInstance inst = random_instance(n, rng);
    int best = 1 << 20;
    std::vector<std::uint32_t> arg;
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
      int c = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) c += inst.weight(i, j) * spin(s, i, n) * spin(s, j, n);
      }
      EXPECT_EQ(c, cost(inst, spins_of(s, n)));
      if (c < best) best = c, arg.clear();
      if (c == best) arg.push_back(s);
    }
    const BruteForceResult r = brute_force_optimum(inst);
    EXPECT_EQ(r.c_star, best);
    EXPECT_EQ(r.minimizers, arg);
    // Global spin flip symmetry pairs the minimizers.
    for (std::uint32_t s : r.minimizers) {
      EXPECT_TRUE(std::binary_search(arg.begin(), arg.end(), s ^ ((1U << n) - 1)));
    }
  }
}

TEST(SkInstance, PermutedHamiltonian) {
  std::mt19937_64 rng(3);
  const SkInstance inst = random_instance(5, rng);
  const std::vector<int> perm = {3, 0, 4, 1, 2};
  ASSERT_TRUE(is_permutation(perm));
  const DiagonalHamiltonian h = hamiltonian(inst, perm);
  const DiagonalHamiltonian h0 = hamiltonian(inst);
  for (std::uint32_t s = 0; s < 32; ++s) {
    // Physical qubit i holds logical perm[i].
    std::vector<int> z(5);
    for (int i = 0; i < 5; ++i) z[perm[i]] = spin(s, i, 5);
    EXPECT_EQ(h.diag[s], cost(inst, z));
    EXPECT_EQ(h0.diag[s], cost(inst, spins_of(s, 5)));
  }
  EXPECT_EQ(inverse_permutation(perm), (std::vector<int>{1, 3, 4, 0, 2}));
  EXPECT_FALSE(is_permutation(std::vector<int>{0, 0, 1}));
}

}  // namespace
}  // namespace corrqaoa
