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

#include "qsorter/measure.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "qsorter/rng.hpp"

namespace qsorter {

namespace {

void check_register_subset(const RegisterLayout& layout,
                           std::span<const std::size_t> registers) {
  if (registers.empty()) {
    throw std::invalid_argument("measurement: empty register list");
  }
  for (std::size_t i = 0; i < registers.size(); ++i) {
    if (registers[i] >= layout.register_count()) {
      throw std::invalid_argument("measurement: register index " +
                                  std::to_string(registers[i]) +
                                  " out of range");
    }
    for (std::size_t j = i + 1; j < registers.size(); ++j) {
      if (registers[i] == registers[j]) {
        throw std::invalid_argument("measurement: duplicate register index " +
                                    std::to_string(registers[i]));
      }
    }
  }
}

std::size_t outcome_space_size(const RegisterLayout& layout,
                               std::span<const std::size_t> registers) {
  std::size_t n = 1;
  for (std::size_t r : registers) {
    n *= static_cast<std::size_t>(layout.at(r).dim.value());
  }
  return n;
}

}  // namespace

OutcomeDistribution::OutcomeDistribution(std::vector<std::size_t> registers,
                                         std::map<LabelTuple, double> probs)
    : registers_(std::move(registers)), probs_(std::move(probs)) {
  if (registers_.empty()) {
    throw std::invalid_argument("OutcomeDistribution: no registers");
  }
  double total = 0.0;
  for (const auto& [labels, p] : probs_) {
    if (labels.size() != registers_.size()) {
      throw std::invalid_argument(
          "OutcomeDistribution: tuple length mismatch");
    }
    if (p < 0.0) {
      throw std::invalid_argument(
          "OutcomeDistribution: negative probability");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > NORM_TOL) {
    throw std::invalid_argument(
        "OutcomeDistribution: probabilities sum to " + std::to_string(total));
  }
}

double OutcomeDistribution::prob(const LabelTuple& labels) const {
  auto it = probs_.find(labels);
  return it == probs_.end() ? 0.0 : it->second;
}

std::vector<LabelTuple> OutcomeDistribution::support(double tol) const {
  std::vector<LabelTuple> out;
  for (const auto& [labels, p] : probs_) {
    if (p > tol) {
      out.push_back(labels);
    }
  }
  return out;
}

OutcomeDistribution marginal(const StateVector& state,
                             std::span<const std::size_t> registers) {
  const RegisterLayout& layout = state.layout();
  check_register_subset(layout, registers);

  std::map<LabelTuple, double> probs;
  const std::size_t space = outcome_space_size(layout, registers);
  if (space <= DENSE_OUTCOME_LIMIT) {
    // Pre-seed every tuple so small-space reports list explicit zeros.
    LabelTuple tuple(registers.size(), 0);
    for (std::size_t flat = 0; flat < space; ++flat) {
      std::size_t rem = flat;
      for (std::size_t i = registers.size(); i-- > 0;) {
        const auto dim =
            static_cast<std::size_t>(layout.at(registers[i]).dim.value());
        tuple[i] = static_cast<int>(rem % dim);
        rem /= dim;
      }
      probs.emplace(tuple, 0.0);
    }
  }

  std::vector<int> labels(layout.register_count());
  LabelTuple tuple(registers.size());
  for (std::size_t idx = 0; idx < layout.total_dim(); ++idx) {
    const double w = std::norm(state.amplitudes()(static_cast<Eigen::Index>(idx)));
    if (w == 0.0) {
      continue;
    }
    layout.decode(idx, labels);
    for (std::size_t i = 0; i < registers.size(); ++i) {
      tuple[i] = labels[registers[i]];
    }
    probs[tuple] += w;
  }
  return OutcomeDistribution(
      std::vector<std::size_t>(registers.begin(), registers.end()),
      std::move(probs));
}

OutcomeDistribution marginal(const StateVector& state,
                             std::initializer_list<std::size_t> registers) {
  return marginal(state,
                  std::span<const std::size_t>(registers.begin(), registers.size()));
}

CollapseResult collapse(const StateVector& state,
                        std::span<const std::size_t> registers,
                        const LabelTuple& outcome) {
  const RegisterLayout& layout = state.layout();
  check_register_subset(layout, registers);
  if (outcome.size() != registers.size()) {
    throw std::invalid_argument("collapse: outcome tuple length mismatch");
  }
  for (std::size_t i = 0; i < registers.size(); ++i) {
    const int dim = layout.at(registers[i]).dim.value();
    if (outcome[i] < 0 || outcome[i] >= dim) {
      throw std::invalid_argument("collapse: outcome label " +
                                  std::to_string(outcome[i]) +
                                  " out of range for register " +
                                  std::to_string(registers[i]));
    }
  }

  Eigen::VectorXcd projected =
      Eigen::VectorXcd::Zero(state.amplitudes().size());
  std::vector<int> labels(layout.register_count());
  double weight = 0.0;
  for (std::size_t idx = 0; idx < layout.total_dim(); ++idx) {
    layout.decode(idx, labels);
    bool match = true;
    for (std::size_t i = 0; i < registers.size(); ++i) {
      if (labels[registers[i]] != outcome[i]) {
        match = false;
        break;
      }
    }
    if (!match) {
      continue;
    }
    const Complex amp = state.amplitudes()(static_cast<Eigen::Index>(idx));
    projected(static_cast<Eigen::Index>(idx)) = amp;
    weight += std::norm(amp);
  }

  if (weight == 0.0) {
    throw std::domain_error("collapse: impossible outcome (probability 0)");
  }

  projected /= std::sqrt(weight);
  // Fix the global phase: lowest-indexed nonzero amplitude real positive.
  for (Eigen::Index i = 0; i < projected.size(); ++i) {
    const double mag = std::abs(projected(i));
    if (mag > 0.0) {
      projected *= std::conj(projected(i)) / mag;
      break;
    }
  }
  return CollapseResult{outcome, weight, StateVector(layout, std::move(projected))};
}

CollapseResult collapse(const StateVector& state,
                        std::initializer_list<std::size_t> registers,
                        const LabelTuple& outcome) {
  return collapse(
      state, std::span<const std::size_t>(registers.begin(), registers.size()),
      outcome);
}

ShotRecord sample(const OutcomeDistribution& dist, std::int64_t shots,
                  std::uint64_t seed) {
  if (shots < 1) {
    throw std::invalid_argument("sample: shots must be >= 1");
  }

  ShotRecord record;
  record.seed = seed;
  record.shots = shots;
  for (const auto& [labels, p] : dist.probs()) {
    record.counts.emplace(labels, 0);
  }

  SplitMix64 rng(seed);
  for (std::int64_t shot = 0; shot < shots; ++shot) {
    const double u = rng.next_double();
    double cdf = 0.0;
    const LabelTuple* chosen = nullptr;
    for (const auto& [labels, p] : dist.probs()) {
      cdf += p;
      if (u < cdf) {
        chosen = &labels;
        break;
      }
    }
    if (chosen == nullptr) {
      // u landed beyond the accumulated total (rounding); take the last
      // nonzero-probability outcome.
      for (auto it = dist.probs().rbegin(); it != dist.probs().rend(); ++it) {
        if (it->second > 0.0) {
          chosen = &it->first;
          break;
        }
      }
    }
    if (chosen == nullptr) {
      throw std::domain_error("sample: distribution has empty support");
    }
    ++record.counts[*chosen];
  }
  return record;
}

}  // namespace qsorter
