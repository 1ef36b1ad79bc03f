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


// Reference computations for tests, written from the definitions: a dense
// state-vector simulator of the QAOA circuit (direct and SWAP-network
// forms) and fluctuator realization probabilities by plain matrix products.

#ifndef CORRQAOA_TESTS_ORACLE_H_
#define CORRQAOA_TESTS_ORACLE_H_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <complex>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "corrqaoa/ansatz.h"
#include "corrqaoa/noisy_executor.h"
#include "corrqaoa/sk_instance.h"

namespace oracle {

using C = std::complex<double>;

struct State {
  int n = 0;
  std::vector<C> amp;

  // Qubit 0 is the most significant bit.
  std::size_t bit(int q) const { return std::size_t{1} << (n - 1 - q); }

  static State plus(int n) {
    State s{n, std::vector<C>(std::size_t{1} << n, C(std::pow(2.0, -0.5 * n), 0.0))};
    return s;
  }

  void single(int q, C u00, C u01, C u10, C u11) {
    const std::size_t m = bit(q);
    for (std::size_t i = 0; i < amp.size(); ++i) {
      if (i & m) continue;
      const C a = amp[i], b = amp[i | m];
      amp[i] = u00 * a + u01 * b;
      amp[i | m] = u10 * a + u11 * b;
    }
  }
  void rx(int q, double t) {
    const C c(std::cos(t / 2), 0), s(0, -std::sin(t / 2));
    single(q, c, s, s, c);
  }
  void ry(int q, double t) {
    const double c = std::cos(t / 2), s = std::sin(t / 2);
    single(q, c, -s, s, c);
  }
  void x(int q) { single(q, 0, 1, 1, 0); }
  void y(int q) { single(q, 0, C(0, -1), C(0, 1), 0); }
  void z(int q) { single(q, 1, 0, 0, -1); }
  void rzz(int a, int b, double t) {
    for (std::size_t i = 0; i < amp.size(); ++i) {
      const int za = (i & bit(a)) ? -1 : 1, zb = (i & bit(b)) ? -1 : 1;
      amp[i] *= std::polar(1.0, -0.5 * t * za * zb);
    }
  }
  void swap(int a, int b) {
    for (std::size_t i = 0; i < amp.size(); ++i) {
      const bool ba = i & bit(a), bb = i & bit(b);
      if (ba && !bb) std::swap(amp[i], amp[(i ^ bit(a)) | bit(b)]);
    }
  }
  // sum_{i<j} w_ij <Z_{label(i)} Z_{label(j)}> where label[k] is the
  // physical qubit holding logical qubit k.
  double energy(const corrqaoa::SkInstance& inst, const std::vector<int>& where) const {
    double e = 0.0;
    for (std::size_t s = 0; s < amp.size(); ++s) {
      const double pr = std::norm(amp[s]);
      double c = 0.0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const int zi = (s & bit(where[i])) ? -1 : 1, zj = (s & bit(where[j])) ? -1 : 1;
          c += inst.weight(i, j) * zi * zj;
        }
      }
      e += pr * c;
    }
    return e;
  }
};

// prod_k RX^n(beta_k) prod_{i<j} RZZ_ij(w_ij gamma_k) on |+>^n.
inline double direct_ansatz(const corrqaoa::SkInstance& inst, const corrqaoa::Params& x) {
  const int n = inst.num_qubits();
  State s = State::plus(n);
  for (int k = 0; k < x.cycles(); ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) s.rzz(i, j, inst.weight(i, j) * x.gammas[k]);
    }
    for (int q = 0; q < n; ++q) s.rx(q, x.betas[k]);
  }
  std::vector<int> where(n);
  for (int i = 0; i < n; ++i) where[i] = i;
  return s.energy(inst, where);
}

// Errors to insert: (physical qubit, time) -> operator name ('X', 'Y', 'Z')
// or 'R' for RY(ry_angle).
struct Insertions {
  std::set<std::pair<int, int>> slots;  // (qubit, time)
  char op = 'Y';
  double ry_angle = 0.0;
};

inline void insert(State& s, int q, const Insertions& ins) {
  switch (ins.op) {
    case 'X':
      s.x(q);
      break;
    case 'Y':
      s.y(q);
      break;
    case 'Z':
      s.z(q);
      break;
    default:
      s.ry(q, ins.ry_angle);
  }
}

// SWAP-network circuit gate by gate on physical qubits. Only the pair list
// of each cost layer is taken from `circuit`; labels and weights are
// tracked here.
inline double swap_network(const corrqaoa::SkInstance& inst, const corrqaoa::AnsatzCircuit& circuit,
                           const corrqaoa::Params& x, const Insertions& ins = {}) {
  const int n = inst.num_qubits();
  State s = State::plus(n);
  std::vector<int> label(n);  // logical qubit at physical position
  for (int i = 0; i < n; ++i) label[i] = i;
  for (int q = 0; q < n; ++q) {
    if (ins.slots.count({q, 0})) insert(s, q, ins);
  }
  for (int t = 1; t <= circuit.depth(); ++t) {
    const corrqaoa::AnsatzLayer& layer = circuit.layer(t);
    if (layer.kind == corrqaoa::LayerKind::kMixer) {
      for (int q = 0; q < n; ++q) s.rx(q, x.betas[layer.cycle]);
    } else {
      for (const corrqaoa::AnsatzGate& g : layer.gates) {
        s.rzz(g.a, g.b, inst.weight(label[g.a], label[g.b]) * x.gammas[layer.cycle]);
        s.swap(g.a, g.b);
        std::swap(label[g.a], label[g.b]);
      }
    }
    for (int q = 0; q < n; ++q) {
      if (ins.slots.count({q, t})) insert(s, q, ins);
    }
  }
  std::vector<int> where(n);
  for (int p = 0; p < n; ++p) where[label[p]] = p;
  return s.energy(inst, where);
}

using M2 = std::array<std::array<double, 2>, 2>;

// T[b'][b] = P(b' | b).
inline M2 transition(double p, double kappa) {
  return {{{1 - p * (1 - kappa), (1 - p) * (1 - kappa)}, {p * (1 - kappa), p + kappa * (1 - p)}}};
}

inline M2 power(const M2& t, int g) {
  M2 r{{{1, 0}, {0, 1}}};
  for (int i = 0; i < g; ++i) {
    M2 o{};
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) o[a][b] = t[a][0] * r[0][b] + t[a][1] * r[1][b];
    }
    r = o;
  }
  return r;
}

// Probability of a chain realization: steady start, then T^gap per step.
inline double chain_probability(double p, double kappa, const std::vector<int>& bits, const std::vector<int>& gaps) {
  double pr = bits[0] ? p : 1 - p;
  const M2 t = transition(p, kappa);
  for (std::size_t k = 1; k < bits.size(); ++k) pr *= power(t, gaps[k - 1])[bits[k]][bits[k - 1]];
  return pr;
}

// sum_b p_b <H>_b over every realization of the slots, grouping slots into
// chains by qubit (temporal) or by time (spatial).
inline double mixture(const corrqaoa::SkInstance& inst, const corrqaoa::AnsatzCircuit& circuit,
                      const corrqaoa::Params& x, const std::vector<std::pair<int, int>>& slots, bool temporal,
                      double p, double kappa, Insertions op) {
  std::map<int, std::vector<std::pair<int, int>>> chains;  // ordered members
  for (const auto& [q, t] : slots) chains[temporal ? q : t].push_back({q, t});
  for (auto& [key, members] : chains) {
    std::sort(members.begin(), members.end(), [&](const auto& a, const auto& b) {
      return temporal ? a.second < b.second : a.first < b.first;
    });
  }
  const std::size_t total = slots.size();
  double sum = 0.0;
  for (std::uint64_t word = 0; word < (std::uint64_t{1} << total); ++word) {
    double pr = 1.0;
    op.slots.clear();
    std::size_t pos = 0;
    for (const auto& [key, members] : chains) {
      std::vector<int> bits, gaps;
      for (std::size_t k = 0; k < members.size(); ++k) {
        const int b = static_cast<int>((word >> (pos + k)) & 1U);
        bits.push_back(b);
        if (b) op.slots.insert(members[k]);
        if (k > 0) {
          gaps.push_back(temporal ? members[k].second - members[k - 1].second
                                  : members[k].first - members[k - 1].first);
        }
      }
      pos += members.size();
      pr *= chain_probability(p, kappa, bits, gaps);
    }
    if (pr == 0.0) continue;
    sum += pr * swap_network(inst, circuit, x, op);
  }
  return sum;
}

}  // namespace oracle

#endif  // CORRQAOA_TESTS_ORACLE_H_
