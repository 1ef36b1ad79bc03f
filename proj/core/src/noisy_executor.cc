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

#include "corrqaoa/noisy_executor.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <type_traits>
#include <utility>

namespace corrqaoa {
namespace {

constexpr Matrix2 kIdentityTransition = {{{1.0, 0.0}, {0.0, 1.0}}};

void check_params(const AnsatzCircuit& circuit, const Params& params) {
  if (params.cycles() != circuit.cycles() || params.gammas.size() != params.betas.size()) {
    throw std::invalid_argument("parameter count does not match the circuit's cycle count");
  }
}

}  // namespace

std::string_view to_string(NoiseMode mode) {
  switch (mode) {
    case NoiseMode::kNone:
      return "none";
    case NoiseMode::kTemporal:
      return "temporal";
    case NoiseMode::kSpatial:
      return "spatial";
  }
  return "?";
}

std::string_view to_string(SlotSchedule schedule) {
  return schedule == SlotSchedule::kAllSlots ? "all-slots" : "active-gates";
}

NoiseMode parse_noise_mode(std::string_view text) {
  if (text == "none") return NoiseMode::kNone;
  if (text == "temporal") return NoiseMode::kTemporal;
  if (text == "spatial") return NoiseMode::kSpatial;
  throw std::invalid_argument("unknown noise model '" + std::string(text) +
                              "' (expected none, temporal or spatial)");
}

SlotSchedule parse_schedule(std::string_view text) {
  if (text == "all-slots") return SlotSchedule::kAllSlots;
  if (text == "active-gates") return SlotSchedule::kActiveGates;
  throw std::invalid_argument("unknown schedule '" + std::string(text) +
                              "' (expected all-slots or active-gates)");
}

void NoiseModel::validate() const {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("noise p must lie in [0, 1]");
  if (!(kappa >= 0.0 && kappa <= 1.0)) throw std::domain_error("noise kappa must lie in [0, 1]");
  if (unitarity_error(error_op) > 1e-12) throw std::domain_error("error operator is not unitary");
}

bool SlotGrid::contains(const Slot& s) const { return index_of(s) >= 0; }

int SlotGrid::index_of(const Slot& s) const {
  auto it = std::lower_bound(slots.begin(), slots.end(), s);
  if (it == slots.end() || *it != s) return -1;
  return static_cast<int>(it - slots.begin());
}

SlotGrid build_slot_grid(const AnsatzCircuit& circuit, const NoiseModel& model) {
  SlotGrid grid;
  grid.mode = model.mode;
  grid.num_qubits = circuit.num_qubits();
  grid.depth = circuit.depth();
  if (model.mode == NoiseMode::kNone) return grid;

  const int n = grid.num_qubits;
  const int m = grid.depth;
  if (model.schedule == SlotSchedule::kAllSlots) {
    const int t0 = model.include_boundary_slot ? 0 : 1;
    for (int q = 0; q < n; ++q) {
      for (int t = t0; t <= m; ++t) grid.slots.push_back({q, t});
    }
  } else {
    for (int t = 1; t <= m; ++t) {
      for (int q : circuit.layer(t).active_qubits) grid.slots.push_back({q, t});
    }
    std::sort(grid.slots.begin(), grid.slots.end());
  }

  if (model.mode == NoiseMode::kTemporal) {
    for (int q = 0; q < n; ++q) {
      SlotChain chain;
      chain.label = q;
      for (const Slot& s : grid.slots) {
        if (s.qubit == q) chain.slots.push_back(s);
      }
      if (chain.slots.empty()) continue;
      for (std::size_t k = 1; k < chain.slots.size(); ++k) {
        chain.gaps.push_back(chain.slots[k].time - chain.slots[k - 1].time);
      }
      grid.chains.push_back(std::move(chain));
    }
  } else {
    for (int t = 0; t <= m; ++t) {
      SlotChain chain;
      chain.label = t;
      for (const Slot& s : grid.slots) {
        if (s.time == t) chain.slots.push_back(s);
      }
      if (chain.slots.empty()) continue;
      for (std::size_t k = 1; k < chain.slots.size(); ++k) {
        chain.gaps.push_back(chain.slots[k].qubit - chain.slots[k - 1].qubit);
      }
      grid.chains.push_back(std::move(chain));
    }
  }
  return grid;
}

struct NoisyLandscape::Cursor {
  // Time (temporal) of each qubit's last interaction, or -1.
  std::vector<int> last;
};

NoisyLandscape::NoisyLandscape(SkInstance instance, AnsatzCircuit circuit, NoiseModel model,
                               ExecutionOptions options)
    : instance_(std::move(instance)),
      circuit_(std::move(circuit)),
      model_(std::move(model)),
      frame_(options.frame),
      backend_(options.backend),
      grid_(build_slot_grid(circuit_, model_)) {
  model_.validate();
  const int n = circuit_.num_qubits();
  if (n != instance_.num_qubits()) throw std::invalid_argument("circuit and instance sizes differ");
  const bool pauli_ok = frame_ == Frame::kLogical && n <= PauliHybridState::kMaxPauliQubits &&
                        (model_.mode == NoiseMode::kNone || pauli_action(model_.error_op).ok);
  if (backend_ == Backend::kAuto) backend_ = pauli_ok ? Backend::kPauliTransfer : Backend::kDensityMatrix;
  if (backend_ == Backend::kPauliTransfer && !pauli_ok) {
    throw std::invalid_argument(
        "the Pauli-transfer backend needs the logical frame, at most 8 qubits and a Pauli error");
  }
  observable_ = frame_ == Frame::kLogical ? hamiltonian(instance_)
                                          : hamiltonian(instance_, circuit_.final_permutation());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      pauli_observable_.push_back({zz_index(i, j, n), static_cast<double>(instance_.weight(i, j))});
    }
  }

  const int m = circuit_.depth();
  slots_by_time_.assign(static_cast<std::size_t>(m) + 1, {});
  for (const Slot& s : grid_.slots) slots_by_time_[s.time].push_back(s.qubit);
  for (auto& qs : slots_by_time_) std::sort(qs.begin(), qs.end());

  labels_.assign(static_cast<std::size_t>(m) + 1, identity_permutation(n));
  layer_parity_.assign(static_cast<std::size_t>(m) + 1, {});
  logical_gates_.assign(static_cast<std::size_t>(m) + 1, {});
  const std::size_t dim = std::size_t{1} << n;
  for (int t = 1; t <= m; ++t) {
    std::vector<int> labels = labels_[t - 1];
    const AnsatzLayer& layer = circuit_.layer(t);
    if (layer.kind == LayerKind::kCost) {
      std::vector<int>& parity = layer_parity_[t];
      if (backend_ == Backend::kDensityMatrix) parity.assign(dim, 0);
      for (const AnsatzGate& g : layer.gates) {
        const int la = labels[g.a];
        const int lb = labels[g.b];
        logical_gates_[t].push_back({la, lb, g.weight});
        for (std::size_t y = 0; y < parity.size(); ++y) {
          parity[y] += g.weight * spin(static_cast<std::uint32_t>(y), la, n) *
                       spin(static_cast<std::uint32_t>(y), lb, n);
        }
        std::swap(labels[g.a], labels[g.b]);
      }
    }
    labels_[t] = std::move(labels);
  }
}

void NoisyLandscape::apply_layer_gates(HybridState& state, const Params& params, int t) const {
  if (frame_ == Frame::kPhysical) {
    state.apply_gates(circuit_.bind_layer(t, params));
    return;
  }
  const AnsatzLayer& layer = circuit_.layer(t);
  if (layer.kind == LayerKind::kMixer) {
    std::vector<QubitGate> gates;
    for (int q = 0; q < circuit_.num_qubits(); ++q) gates.push_back(QubitGate::rx(q, params.betas[layer.cycle]));
    state.apply_gates(gates);
    return;
  }
  if (layer.gates.empty()) return;
  // exp(-i gamma/2 sum w Z_a Z_b); the parity sum takes few distinct values.
  const double gamma = params.gammas[layer.cycle];
  const int span = static_cast<int>(layer.gates.size());
  std::vector<Complex> table(static_cast<std::size_t>(2 * span + 1));
  for (int v = -span; v <= span; ++v) table[v + span] = std::polar(1.0, -0.5 * gamma * v);
  const std::vector<int>& parity = layer_parity_[t];
  std::vector<Complex> d(parity.size());
  for (std::size_t y = 0; y < d.size(); ++y) d[y] = table[parity[y] + span];
  state.apply_diagonal(d);
}

void NoisyLandscape::apply_layer_gates(PauliHybridState& state, const Params& params, int t) const {
  const AnsatzLayer& layer = circuit_.layer(t);
  const int n = circuit_.num_qubits();
  std::vector<PauliRotation> rotations;
  if (layer.kind == LayerKind::kMixer) {
    for (int q = 0; q < n; ++q) {
      rotations.push_back({pauli_index(std::uint32_t{1} << (n - 1 - q), 0, n), params.betas[layer.cycle]});
    }
  } else {
    const double gamma = params.gammas[layer.cycle];
    for (const LogicalGate& g : logical_gates_[t]) rotations.push_back({zz_index(g.a, g.b, n), g.weight * gamma});
  }
  state.apply_rotations(rotations);
}

double NoisyLandscape::measure(const HybridState& state) const {
  return state.expectation(observable_.diag);
}

double NoisyLandscape::measure(const PauliHybridState& state) const {
  return state.expectation(pauli_observable_);
}

template <class State>
State NoisyLandscape::start(Cursor& cursor) const {
  const int n = circuit_.num_qubits();
  State state = State::plus_state(n);
  if (model_.mode == NoiseMode::kTemporal) {
    for (int q = 0; q < n; ++q) state.attach_fluctuator(q, model_.p);
    cursor.last.assign(static_cast<std::size_t>(n), -1);
  }
  return state;
}

template <class State>
void NoisyLandscape::noise_at(State& state, Cursor& cursor, int t, EvaluationStats* stats) const {
  const std::vector<int>& qubits = slots_by_time_[t];
  if (model_.mode == NoiseMode::kNone || qubits.empty()) return;
  const FluctuatorChain chain(model_.p, model_.kappa);
  std::vector<Interaction> batch;
  batch.reserve(qubits.size());
  if (model_.mode == NoiseMode::kTemporal) {
    for (int q : qubits) {
      // A chain's first interaction sees the untouched steady state, on which
      // any power of T acts trivially.
      const int last = cursor.last[q];
      const Matrix2 tr = last < 0 ? kIdentityTransition : chain.transition_power(t - last);
      batch.push_back({q, register_qubit(q, t), tr, model_.error_op});
      cursor.last[q] = t;
    }
    state.apply_interactions(batch);
  } else {
    state.attach_fluctuator(t, model_.p);
    if (stats) stats->peak_blocks = std::max(stats->peak_blocks, state.num_blocks());
    int prev = -1;
    for (int q : qubits) {
      const Matrix2 tr = prev < 0 ? kIdentityTransition : chain.transition_power(q - prev);
      batch.push_back({t, register_qubit(q, t), tr, model_.error_op});
      prev = q;
    }
    state.apply_interactions(batch);
    state.trace_out_fluctuator(t);
  }
  if (stats) stats->peak_blocks = std::max(stats->peak_blocks, state.num_blocks());
}

template <class State>
void NoisyLandscape::run_layer(State& state, Cursor& cursor, const Params& params, int t,
                               EvaluationStats* stats) const {
  apply_layer_gates(state, params, t);
  noise_at(state, cursor, t, stats);
}

template <class State>
double NoisyLandscape::value_impl(const Params& params, EvaluationStats* stats) const {
  Cursor cursor;
  State state = start<State>(cursor);
  if (stats) *stats = {state.num_blocks(), 0};
  noise_at(state, cursor, 0, stats);
  for (int t = 1; t <= circuit_.depth(); ++t) run_layer(state, cursor, params, t, stats);
  if (stats) stats->final_blocks = state.num_blocks();
  return measure(state);
}

double NoisyLandscape::value(const Params& params, EvaluationStats* stats) const {
  check_params(circuit_, params);
  if (backend_ == Backend::kPauliTransfer) return value_impl<PauliHybridState>(params, stats);
  return value_impl<HybridState>(params, stats);
}

template <class State>
double NoisyLandscape::realization_impl(const Params& params,
                                        const std::vector<std::vector<int>>& by_time) const {
  State state = State::plus_state(circuit_.num_qubits());
  for (int t = 0; t <= circuit_.depth(); ++t) {
    if (t > 0) apply_layer_gates(state, params, t);
    for (int q : by_time[t]) {
      if constexpr (std::is_same_v<State, PauliHybridState>) {
        const PauliAction pa = pauli_action(model_.error_op);
        const int n = circuit_.num_qubits();
        const std::uint32_t bit = std::uint32_t{1} << (n - 1 - register_qubit(q, t));
        state.apply_pauli(pauli_index(pa.flip ? bit : 0, pa.sign ? bit : 0, n));
      } else {
        state.apply_single_qubit(register_qubit(q, t), model_.error_op);
      }
    }
  }
  return measure(state);
}

double NoisyLandscape::value_given_realization(const Params& params,
                                               std::span<const Slot> excited) const {
  check_params(circuit_, params);
  std::vector<std::vector<int>> by_time(static_cast<std::size_t>(circuit_.depth()) + 1);
  for (const Slot& s : excited) {
    if (!grid_.contains(s)) {
      throw std::out_of_range("slot (" + std::to_string(s.qubit) + ", " + std::to_string(s.time) +
                              ") is not in the noise grid");
    }
    by_time[s.time].push_back(s.qubit);
  }
  for (auto& qs : by_time) {
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  }
  if (backend_ == Backend::kPauliTransfer) return realization_impl<PauliHybridState>(params, by_time);
  return realization_impl<HybridState>(params, by_time);
}

template <class State>
std::vector<double> NoisyLandscape::gradient_impl(const Params& params, double step) const {
  const std::vector<double> x = params.flat();
  const int d = static_cast<int>(x.size());
  std::vector<int> first(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) first[i] = circuit_.first_layer_of_parameter(i);
  std::vector<int> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return first[a] < first[b]; });

  std::vector<double> grad(static_cast<std::size_t>(d));
  Cursor cursor;
  State prefix = start<State>(cursor);
  noise_at(prefix, cursor, 0, nullptr);
  int done = 0;  // layers already folded into `prefix`
  for (int i : order) {
    while (done + 1 < first[i]) {
      ++done;
      run_layer(prefix, cursor, params, done, nullptr);
    }
    double f[2];
    for (int s = 0; s < 2; ++s) {
      std::vector<double> xs = x;
      xs[i] += s == 0 ? step : -step;
      const Params shifted = Params::from_flat(xs);
      State state = prefix;
      Cursor c = cursor;
      for (int t = first[i]; t <= circuit_.depth(); ++t) run_layer(state, c, shifted, t, nullptr);
      f[s] = measure(state);
    }
    grad[i] = (f[0] - f[1]) / (2.0 * step);
  }
  return grad;
}

std::vector<double> NoisyLandscape::central_gradient(const Params& params, double step) const {
  if (!(step > 0.0)) throw std::invalid_argument("gradient step must be positive");
  check_params(circuit_, params);
  if (backend_ == Backend::kPauliTransfer) return gradient_impl<PauliHybridState>(params, step);
  return gradient_impl<HybridState>(params, step);
}

double evaluate_landscape(const SkInstance& instance, const AnsatzCircuit& circuit,
                          const Params& params, const NoiseModel& model) {
  return NoisyLandscape(instance, circuit, model).value(params);
}

double evaluate_given_realization(const SkInstance& instance, const AnsatzCircuit& circuit,
                                  const Params& params, const NoiseModel& model,
                                  std::span<const Slot> excited) {
  return NoisyLandscape(instance, circuit, model).value_given_realization(params, excited);
}

}  // namespace corrqaoa
