// Copyright 2026 The qsorter authors
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

#ifndef QSORTER_PROTOCOLS_HPP
#define QSORTER_PROTOCOLS_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qsorter/gates.hpp"
#include "qsorter/hilbert.hpp"
#include "qsorter/measure.hpp"

namespace qsorter {

/// Remote output-port determination for two parties sharing the diagonal
/// entangled state sum_j alpha_j |j>_A |j>_B. `input_a` / `input_b` are the
/// input ports Alice and Bob happen to choose; the port statistics do not
/// depend on them.
struct BipartiteConfig {
  Dim dim;
  std::vector<Complex> alphas;
  BasisLabel input_a;
  BasisLabel input_b;
};

enum class TripartiteKind { GHZ, W };

/// Three qubit parties (Alice, Bob, Charlie) sharing either the GHZ or the W
/// state, each feeding their particle into a local sorter through the given
/// input port.
struct TripartiteConfig {
  TripartiteKind kind;
  BasisLabel input_a;
  BasisLabel input_b;
  BasisLabel input_c;
};

struct ShotPlan {
  std::int64_t shots;
  std::uint64_t seed;
};

struct ProtocolResult {
  /// State after every party's sorter, in party-major register order
  /// (system_A, port_A, system_B, port_B[, system_C, port_C]).
  StateVector final_state;
  /// Joint distribution over all parties' port registers.
  OutcomeDistribution joint_ports;
  OutcomeDistribution alice_marginal;
  /// Whether Alice's port outcome determines every other party's port.
  bool certainty;
  /// One collapse per Alice port outcome with nonzero probability,
  /// ascending by outcome label.
  std::vector<CollapseResult> branches;
  std::optional<ShotRecord> shots;
};

/// sum_j alpha_j |j>_A |j>_B. Rejects non-normalized input (tolerance
/// NORM_TOL); nothing is silently rescaled.
StateVector entangled_state(std::span<const Complex> alphas);

/// (|000> + |111>) / sqrt(2) on three qubit system registers.
StateVector ghz_state();

/// (|001> + |010> + |100>) / sqrt(3) on three qubit system registers.
StateVector w_state();

/// True iff every Alice label with nonzero marginal appears in exactly one
/// joint tuple of the support, i.e. Alice's outcome pins everyone else's.
bool certainty_verdict(const OutcomeDistribution& joint_ports);

ProtocolResult run_bipartite(const BipartiteConfig& cfg,
                             std::optional<ShotPlan> plan = std::nullopt);

ProtocolResult run_tripartite(const TripartiteConfig& cfg,
                              std::optional<ShotPlan> plan = std::nullopt);

}  // namespace qsorter

#endif  // QSORTER_PROTOCOLS_HPP
