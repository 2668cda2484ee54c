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

#ifndef QSORTER_MEASURE_HPP
#define QSORTER_MEASURE_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qsorter/hilbert.hpp"

namespace qsorter {

/// Probabilities below this are treated as outside the support when deciding
/// structural questions (certainty verdicts).
inline constexpr double SUPPORT_TOL = 1e-12;

/// Outcome spaces with at most this many label tuples keep explicit 0.0
/// entries; larger spaces stay sparse.
inline constexpr std::size_t DENSE_OUTCOME_LIMIT = 256;

using LabelTuple = std::vector<int>;

/// Probability map over basis-label tuples of selected registers. Iteration
/// order is label-tuple ascending (lexicographic).
class OutcomeDistribution {
 public:
  OutcomeDistribution(std::vector<std::size_t> registers,
                      std::map<LabelTuple, double> probs);

  const std::vector<std::size_t>& registers() const { return registers_; }
  const std::map<LabelTuple, double>& probs() const { return probs_; }

  /// Probability of a tuple; 0 for tuples not stored.
  double prob(const LabelTuple& labels) const;

  /// Tuples with probability above tol, in ascending order.
  std::vector<LabelTuple> support(double tol = SUPPORT_TOL) const;

 private:
  std::vector<std::size_t> registers_;
  std::map<LabelTuple, double> probs_;
};

struct ShotRecord {
  std::uint64_t seed = 0;
  std::int64_t shots = 0;
  std::map<LabelTuple, std::int64_t> counts;
};

struct CollapseResult {
  LabelTuple outcome;
  double probability;
  StateVector post_state;
};

/// Born-rule marginal over a register subset: prob(t) is the squared-modulus
/// sum over all other-register labels.
OutcomeDistribution marginal(const StateVector& state,
                             std::span<const std::size_t> registers);
OutcomeDistribution marginal(const StateVector& state,
                             std::initializer_list<std::size_t> registers);

/// Projects onto the given outcome of the chosen registers and renormalizes.
/// Outcomes with zero projected weight are rejected with an "impossible
/// outcome" error instead of producing NaNs. The global phase of the post
/// state is fixed by making its lowest-indexed nonzero amplitude real and
/// positive, so collapsing onto a lone basis term yields that ket with
/// amplitude exactly 1.
CollapseResult collapse(const StateVector& state,
                        std::span<const std::size_t> registers,
                        const LabelTuple& outcome);
CollapseResult collapse(const StateVector& state,
                        std::initializer_list<std::size_t> registers,
                        const LabelTuple& outcome);

/// Draws `shots` i.i.d. outcomes via inverse-CDF over tuples in ascending
/// label order, using SplitMix64 seeded with `seed`. Deterministic given
/// (dist, shots, seed).
ShotRecord sample(const OutcomeDistribution& dist, std::int64_t shots,
                  std::uint64_t seed);

}  // namespace qsorter

#endif  // QSORTER_MEASURE_HPP
