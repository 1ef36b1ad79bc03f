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

#ifndef CORRQAOA_NOISY_EXECUTOR_H_
#define CORRQAOA_NOISY_EXECUTOR_H_

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corrqaoa/ansatz.h"
#include "corrqaoa/hybrid_state.h"
#include "corrqaoa/pauli_state.h"
#include "corrqaoa/sk_instance.h"

namespace corrqaoa {

enum class NoiseMode { kNone, kTemporal, kSpatial };

/// Which (qubit, time) positions can host a fluctuator interaction.
/// kAllSlots: every qubit after every layer. kActiveGates: a qubit only after
/// a layer in which it was hit by an RZZ' (or RZ) gate.
enum class SlotSchedule { kAllSlots, kActiveGates };

std::string_view to_string(NoiseMode mode);
std::string_view to_string(SlotSchedule schedule);
NoiseMode parse_noise_mode(std::string_view text);
SlotSchedule parse_schedule(std::string_view text);

/// Fluctuator noise on the ansatz.
///
/// Temporal: one fluctuator per qubit, stepping once per layer.
/// Spatial: one fresh fluctuator per layer, stepping once per qubit
/// (ascending index) and discarded after the layer.
///
/// include_boundary_slot adds time t = 0: an interaction on the initial
/// state before the first layer.
struct NoiseModel {
  NoiseMode mode = NoiseMode::kNone;
  double p = 0.0;
  double kappa = 0.0;
  Matrix2c error_op = pauli_y();
  SlotSchedule schedule = SlotSchedule::kActiveGates;
  bool include_boundary_slot = false;

  static NoiseModel none() { return {}; }
  static NoiseModel temporal(double p, double kappa) {
    NoiseModel m;
    m.mode = NoiseMode::kTemporal, m.p = p, m.kappa = kappa;
    return m;
  }
  static NoiseModel spatial(double p, double kappa) {
    NoiseModel m;
    m.mode = NoiseMode::kSpatial, m.p = p, m.kappa = kappa;
    return m;
  }

  /// Throws std::domain_error on a bad probability or non-unitary error_op.
  void validate() const;
};

struct Slot {
  int qubit = 0;
  int time = 0;

  auto operator<=>(const Slot&) const = default;
};

/// Slots visited by one fluctuator, in the order it visits them.
/// gaps[k] is the number of Markov steps between slots k and k + 1.
struct SlotChain {
  int label = 0;  // qubit (temporal) or time (spatial)
  std::vector<Slot> slots;
  std::vector<int> gaps;
};

struct SlotGrid {
  NoiseMode mode = NoiseMode::kNone;
  int num_qubits = 0;
  int depth = 0;
  /// Sorted by (qubit, time).
  std::vector<Slot> slots;
  std::vector<SlotChain> chains;

  std::size_t size() const { return slots.size(); }
  bool contains(const Slot& s) const;
  /// Position of `s` in `slots`, or -1.
  int index_of(const Slot& s) const;
};

SlotGrid build_slot_grid(const AnsatzCircuit& circuit, const NoiseModel& model);

/// How the SWAP network is simulated. kPhysical applies every RZZ' gate as
/// written. kLogical keeps each logical qubit in a fixed register position,
/// so a SWAP is a relabeling, RZZ' reduces to a diagonal phase and noise
/// slots are mapped through the current labels. Both are exact.
enum class Frame { kLogical, kPhysical };

/// kDensityMatrix evolves HybridState blocks. kPauliTransfer evolves
/// PauliHybridState coefficients and needs the logical frame and a Pauli
/// error operator. kAuto picks kPauliTransfer whenever it applies.
enum class Backend { kAuto, kDensityMatrix, kPauliTransfer };

struct ExecutionOptions {
  Frame frame = Frame::kLogical;
  Backend backend = Backend::kAuto;
};

struct EvaluationStats {
  std::size_t peak_blocks = 0;
  std::size_t final_blocks = 0;
};

/// Exact noisy cost landscape of one instance/circuit/noise model.
/// Immutable after construction; evaluations are independent.
class NoisyLandscape {
 public:
  NoisyLandscape(SkInstance instance, AnsatzCircuit circuit, NoiseModel model,
                 ExecutionOptions options = {});

  const SkInstance& instance() const { return instance_; }
  const AnsatzCircuit& circuit() const { return circuit_; }
  const NoiseModel& model() const { return model_; }
  const SlotGrid& grid() const { return grid_; }
  Frame frame() const { return frame_; }
  /// Never kAuto.
  Backend backend() const { return backend_; }
  /// Cost Hamiltonian on the simulated register: composed with the final
  /// qubit permutation in the physical frame, unpermuted in the logical one.
  const DiagonalHamiltonian& observable() const { return observable_; }

  double value(const Params& params, EvaluationStats* stats = nullptr) const;
  double operator()(const Params& params) const { return value(params); }

  /// Noiseless circuit with the error operator inserted at every slot in
  /// `excited` and nowhere else. Throws std::out_of_range for a slot outside
  /// the grid.
  double value_given_realization(const Params& params, std::span<const Slot> excited) const;

  /// Central differences of value() in every flat parameter. Layers that
  /// precede a parameter's first use are simulated once and reused.
  std::vector<double> central_gradient(const Params& params, double step) const;

 private:
  struct Cursor;
  struct LogicalGate {
    int a = 0;
    int b = 0;
    int weight = 0;
  };

  template <class State>
  State start(Cursor& cursor) const;
  template <class State>
  void run_layer(State& state, Cursor& cursor, const Params& params, int t, EvaluationStats* stats) const;
  template <class State>
  void noise_at(State& state, Cursor& cursor, int t, EvaluationStats* stats) const;
  template <class State>
  double value_impl(const Params& params, EvaluationStats* stats) const;
  template <class State>
  double realization_impl(const Params& params, const std::vector<std::vector<int>>& by_time) const;
  template <class State>
  std::vector<double> gradient_impl(const Params& params, double step) const;
  void apply_layer_gates(HybridState& state, const Params& params, int t) const;
  void apply_layer_gates(PauliHybridState& state, const Params& params, int t) const;
  double measure(const HybridState& state) const;
  double measure(const PauliHybridState& state) const;
  /// Register qubit that holds physical qubit q right after layer t.
  int register_qubit(int q, int t) const { return frame_ == Frame::kLogical ? labels_[t][q] : q; }

  SkInstance instance_;
  AnsatzCircuit circuit_;
  NoiseModel model_;
  Frame frame_;
  Backend backend_;
  SlotGrid grid_;
  DiagonalHamiltonian observable_;
  /// slots_by_time_[t]: qubits with a slot at time t, ascending.
  std::vector<std::vector<int>> slots_by_time_;
  /// labels_[t][q]: logical qubit at physical position q after layer t.
  std::vector<std::vector<int>> labels_;
  /// Cost layers in the logical frame: per basis state, the sum of w z_a z_b
  /// over the layer's gates (empty for mixer layers).
  std::vector<std::vector<int>> layer_parity_;
  /// Cost layers in the logical frame as gates on logical qubit pairs.
  std::vector<std::vector<LogicalGate>> logical_gates_;
  std::vector<PauliTerm> pauli_observable_;
};

double evaluate_landscape(const SkInstance& instance, const AnsatzCircuit& circuit,
                          const Params& params, const NoiseModel& model);

double evaluate_given_realization(const SkInstance& instance, const AnsatzCircuit& circuit,
                                  const Params& params, const NoiseModel& model,
                                  std::span<const Slot> excited);

}  // namespace corrqaoa

#endif  // CORRQAOA_NOISY_EXECUTOR_H_
