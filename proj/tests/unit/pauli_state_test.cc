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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "corrqaoa/fluctuator.h"
#include "corrqaoa/hybrid_state.h"

namespace corrqaoa {
namespace {

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

TEST(PauliState, PlusStateCoefficients) {
  const int n = 3;
  const PauliHybridState s = PauliHybridState::plus_state(n);
  EXPECT_EQ(s.num_coefficients(), 32U);
  // |+><+| = prod (I + X) / 2: every pure-X string has coefficient 1.
  for (std::uint32_t x = 0; x < 8; ++x) EXPECT_NEAR(s.coefficient(0, pauli_index(x, 0, n)), 1.0, 1e-15);
  EXPECT_NEAR(s.coefficient(0, zz_index(0, 1, n)), 0.0, 1e-15);
  EXPECT_NEAR(s.trace(), 1.0, 1e-15);
  EXPECT_LT(max_diff(s.reduced_density(), HybridState::plus_state(n).reduced_density()), 1e-15);
}

TEST(PauliState, RandomCircuitMatchesDensityBackend) {
  std::mt19937_64 rng(8);
  const int n = 4;
  PauliHybridState ps = PauliHybridState::plus_state(n);
  HybridState hs = HybridState::plus_state(n);
  for (int f = 0; f < 2; ++f) {
    ps.attach_fluctuator(f, 0.2 + 0.3 * f);
    hs.attach_fluctuator(f, 0.2 + 0.3 * f);
  }
  const Matrix2c errs[3] = {pauli_x(), pauli_y(), pauli_z()};
  for (int step = 0; step < 40; ++step) {
    const int a = static_cast<int>(rng() % n), b = (a + 1 + static_cast<int>(rng() % (n - 1))) % n;
    const double t = 0.37 * step - 4.0;
    switch (rng() % 4) {
      case 0:
        ps.apply_x_rotation(a, t), hs.apply_unitary(QubitGate::rx(a, t));
        break;
      case 1:
        ps.apply_zz_rotation(a, b, t), hs.apply_unitary(QubitGate::rzz(a, b, t));
        break;
      case 2: {
        const Interaction i{static_cast<int>(rng() % 2), a, transition_matrix(0.2, 0.6), errs[rng() % 3]};
        ps.apply_interactions({&i, 1}), hs.apply_interactions({&i, 1});
        break;
      }
      default: {
        const std::vector<PauliRotation> rot = {{pauli_index(1U << (n - 1 - a), 0, n), t},
                                                {zz_index(a, b, n), -t}};
        ps.apply_rotations(rot);
        hs.apply_unitary(QubitGate::rx(a, t)), hs.apply_unitary(QubitGate::rzz(a, b, -t));
      }
    }
  }
  for (std::size_t c = 0; c < 4; ++c) {
    const auto blk = hs.block(c);
    EXPECT_LT(max_diff(ps.block_density(c), {blk.begin(), blk.end()}), 1e-12) << c;
  }
  std::vector<double> diag(16);
  std::vector<PauliTerm> terms;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double w = (i + j) % 2 ? 1.0 : -1.0;
      terms.push_back({zz_index(i, j, n), w});
      for (std::uint32_t s = 0; s < 16; ++s) {
        diag[s] += w * (((s >> (n - 1 - i)) & 1U) == ((s >> (n - 1 - j)) & 1U) ? 1 : -1);
      }
    }
  }
  EXPECT_NEAR(ps.expectation(terms), hs.expectation(diag), 1e-12);
}

TEST(PauliState, DensityRoundTrip) {
  HybridState hs = HybridState::plus_state(3);
  hs.apply_unitary(QubitGate::rzz(0, 2, 0.8));
  hs.apply_unitary(QubitGate::rx(1, 0.3));
  const std::vector<Complex> rho = hs.reduced_density();
  const PauliHybridState ps = PauliHybridState::from_density(3, rho);
  EXPECT_LT(max_diff(ps.reduced_density(), rho), 1e-14);
}

TEST(PauliState, ParitySector) {
  const int n = 2;
  EXPECT_TRUE(is_parity_even(zz_index(0, 1, n), n));
  EXPECT_TRUE(is_parity_even(pauli_index(0b10, 0, n), n));
  EXPECT_FALSE(is_parity_even(pauli_index(0, 0b10, n), n));
  PauliHybridState s = PauliHybridState::plus_state(n);
  EXPECT_THROW(s.apply_rotation(pauli_index(0, 0b01, n), 0.3), std::invalid_argument);
  EXPECT_EQ(s.coefficient(0, pauli_index(0, 0b01, n)), 0.0);
  // |0><0| on one qubit of two has a parity-odd Z component.
  HybridState h = HybridState::plus_state(n);
  h.apply_unitary(QubitGate::ry(0, -1.5707963267948966));
  EXPECT_THROW(PauliHybridState::from_density(n, h.reduced_density()), std::invalid_argument);
  s.attach_fluctuator(0, 0.1);
  EXPECT_THROW(s.apply_controlled_error(0, 0, ry_matrix(0.2)), std::invalid_argument);
}

}  // namespace
}  // namespace corrqaoa
