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

#include "qsorter/protocols.hpp"

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace qsorter {

namespace {

// Permutes registers: position i of the result holds register perm[i] of the
// input, amplitudes moved accordingly.
StateVector reorder_registers(const StateVector& state,
                              std::span<const std::size_t> perm) {
  const RegisterLayout& old_layout = state.layout();
  std::vector<Register> regs;
  regs.reserve(perm.size());
  for (std::size_t p : perm) {
    regs.push_back(old_layout.at(p));
  }
  RegisterLayout new_layout(std::move(regs));

  Eigen::VectorXcd amps(state.amplitudes().size());
  std::vector<int> old_labels(old_layout.register_count());
  std::vector<int> new_labels(perm.size());
  for (std::size_t idx = 0; idx < old_layout.total_dim(); ++idx) {
    old_layout.decode(idx, old_labels);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      new_labels[i] = old_labels[perm[i]];
    }
    amps(static_cast<Eigen::Index>(new_layout.encode(new_labels))) =
        state.amplitudes()(static_cast<Eigen::Index>(idx));
  }
  return StateVector(std::move(new_layout), std::move(amps));
}

// Shared tail of both runners: measure ports, collapse per Alice outcome,
// optionally sample.
ProtocolResult finish_run(StateVector final_state,
                          const std::vector<std::size_t>& port_registers,
                          std::optional<ShotPlan> plan) {
  OutcomeDistribution joint = marginal(final_state, port_registers);
  OutcomeDistribution alice = marginal(final_state, {port_registers[0]});
  const bool certainty = certainty_verdict(joint);

  std::vector<CollapseResult> branches;
  for (const auto& [labels, p] : alice.probs()) {
    if (p > 0.0) {
      branches.push_back(collapse(final_state, {port_registers[0]}, labels));
    }
  }

  std::optional<ShotRecord> shots;
  if (plan.has_value()) {
    shots = sample(joint, plan->shots, plan->seed);
  }

  return ProtocolResult{std::move(final_state), std::move(joint),
                        std::move(alice),       certainty,
                        std::move(branches),    std::move(shots)};
}

}  // namespace

StateVector entangled_state(std::span<const Complex> alphas) {
  if (alphas.size() < 2) {
    throw std::invalid_argument("entangled_state: need at least 2 amplitudes");
  }
  double total = 0.0;
  for (const Complex& a : alphas) {
    total += std::norm(a);
  }
  if (std::abs(total - 1.0) > NORM_TOL) {
    throw std::invalid_argument(
        "entangled_state: amplitudes are not normalized (sum of squares " +
        std::to_string(total) + "); refusing to rescale");
  }

  const Dim d(static_cast<int>(alphas.size()));
  RegisterLayout layout({{RegisterRole::System, d, Party::Alice},
                         {RegisterRole::System, d, Party::Bob}});
  Eigen::VectorXcd amps =
      Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(layout.total_dim()));
  for (int j = 0; j < d.value(); ++j) {
    const int labels[] = {j, j};
    amps(static_cast<Eigen::Index>(layout.encode(labels))) = alphas[j];
  }
  return StateVector(std::move(layout), std::move(amps));
}

StateVector ghz_state() {
  const Dim two(2);
  RegisterLayout layout({{RegisterRole::System, two, Party::Alice},
                         {RegisterRole::System, two, Party::Bob},
                         {RegisterRole::System, two, Party::Charlie}});
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(8);
  const double w = 1.0 / std::sqrt(2.0);
  amps(0) = w;  // |000>
  amps(7) = w;  // |111>
  return StateVector(std::move(layout), std::move(amps));
}

StateVector w_state() {
  const Dim two(2);
  RegisterLayout layout({{RegisterRole::System, two, Party::Alice},
                         {RegisterRole::System, two, Party::Bob},
                         {RegisterRole::System, two, Party::Charlie}});
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(8);
  const double w = 1.0 / std::sqrt(3.0);
  amps(1) = w;  // |001>
  amps(2) = w;  // |010>
  amps(4) = w;  // |100>
  return StateVector(std::move(layout), std::move(amps));
}

bool certainty_verdict(const OutcomeDistribution& joint_ports) {
  if (joint_ports.registers().size() < 2) {
    throw std::invalid_argument(
        "certainty_verdict: need the ports of at least 2 parties");
  }
  std::map<int, std::set<LabelTuple>> per_alice_label;
  for (const LabelTuple& t : joint_ports.support()) {
    per_alice_label[t[0]].insert(t);
  }
  for (const auto& [label, tuples] : per_alice_label) {
    if (tuples.size() != 1) {
      return false;
    }
  }
  return true;
}

ProtocolResult run_bipartite(const BipartiteConfig& cfg,
                             std::optional<ShotPlan> plan) {
  if (static_cast<int>(cfg.alphas.size()) != cfg.dim.value()) {
    throw std::invalid_argument("run_bipartite: expected " +
                                std::to_string(cfg.dim.value()) +
                                " amplitudes, got " +
                                std::to_string(cfg.alphas.size()));
  }
  if (cfg.input_a.dim() != cfg.dim || cfg.input_b.dim() != cfg.dim) {
    throw std::invalid_argument(
        "run_bipartite: input-port dimension does not match dim");
  }

  StateVector shared = entangled_state(cfg.alphas);
  RegisterLayout port_a({{RegisterRole::Port, cfg.dim, Party::Alice}});
  RegisterLayout port_b({{RegisterRole::Port, cfg.dim, Party::Bob}});
  StateVector state = tensor(
      tensor(shared, basis_state({cfg.input_a.value()}, port_a)),
      basis_state({cfg.input_b.value()}, port_b));
  // (system_A, system_B, port_A, port_B) -> party-major pairs.
  const std::size_t perm[] = {0, 2, 1, 3};
  state = reorder_registers(state, perm);

  const Unitary sorter = mqs(cfg.dim);
  state = apply(sorter, {0, 1}, state);
  state = apply(sorter, {2, 3}, state);

  return finish_run(std::move(state), {1, 3}, plan);
}

ProtocolResult run_tripartite(const TripartiteConfig& cfg,
                              std::optional<ShotPlan> plan) {
  const Dim two(2);
  if (cfg.input_a.dim() != two || cfg.input_b.dim() != two ||
      cfg.input_c.dim() != two) {
    throw std::invalid_argument("run_tripartite: input ports must be qubits");
  }

  StateVector shared =
      cfg.kind == TripartiteKind::GHZ ? ghz_state() : w_state();
  RegisterLayout port_a({{RegisterRole::Port, two, Party::Alice}});
  RegisterLayout port_b({{RegisterRole::Port, two, Party::Bob}});
  RegisterLayout port_c({{RegisterRole::Port, two, Party::Charlie}});
  StateVector state = tensor(
      tensor(tensor(shared, basis_state({cfg.input_a.value()}, port_a)),
             basis_state({cfg.input_b.value()}, port_b)),
      basis_state({cfg.input_c.value()}, port_c));
  // (sys_A, sys_B, sys_C, port_A, port_B, port_C) -> party-major pairs.
  const std::size_t perm[] = {0, 3, 1, 4, 2, 5};
  state = reorder_registers(state, perm);

  const Unitary sorter = mqs(two);
  state = apply(sorter, {0, 1}, state);
  state = apply(sorter, {2, 3}, state);
  state = apply(sorter, {4, 5}, state);

  return finish_run(std::move(state), {1, 3, 5}, plan);
}

}  // namespace qsorter
