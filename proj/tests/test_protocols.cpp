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
#include <numbers>

#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"

using namespace qsorter;

namespace {

// True iff the state is exactly the given basis ket (up to 1e-12 and the
// collapse phase convention).
bool is_basis_ket(const StateVector& state, const std::vector<int>& labels) {
  const std::size_t hot = state.layout().encode(labels);
  for (std::size_t idx = 0; idx < state.layout().total_dim(); ++idx) {
    const Complex amp = state.amplitudes()(static_cast<Eigen::Index>(idx));
    const Complex expected = idx == hot ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    if (std::abs(amp - expected) > 1e-12) {
      return false;
    }
  }
  return true;
}

std::vector<Complex> uniform_alphas(int d) {
  return std::vector<Complex>(static_cast<std::size_t>(d),
                              Complex(1.0 / std::sqrt(double(d)), 0.0));
}

}  // namespace

TEST_CASE("entangled_state") {
  SECTION("Bell pair") {
    const std::vector<Complex> alphas = uniform_alphas(2);
    const StateVector s = entangled_state(alphas);
    CHECK(s.layout().register_count() == 2);
    CHECK(std::abs(s.amplitudes()(0) - alphas[0]) == 0.0);
    CHECK(s.amplitudes()(1) == Complex(0.0, 0.0));
    CHECK(s.amplitudes()(2) == Complex(0.0, 0.0));
    CHECK(std::abs(s.amplitudes()(3) - alphas[1]) == 0.0);
  }

  SECTION("degenerate amplitudes give a product state") {
    const std::vector<Complex> alphas = {1.0, 0.0, 0.0};
    const StateVector s = entangled_state(alphas);
    CHECK(s.amplitudes()(0) == Complex(1.0, 0.0));
    CHECK(s.amplitudes().cwiseAbs().sum() == 1.0);
  }

  SECTION("complex amplitudes land on the diagonal") {
    const std::vector<Complex> alphas = {Complex(0.6, 0.0), Complex(0.0, 0.8)};
    const StateVector s = entangled_state(alphas);
    CHECK(s.amplitudes()(0) == Complex(0.6, 0.0));
    CHECK(s.amplitudes()(3) == Complex(0.0, 0.8));
  }

  SECTION("rejects non-normalized and undersized input") {
    CHECK_THROWS_AS(entangled_state(std::vector<Complex>{1.0, 1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(entangled_state(std::vector<Complex>{
                        Complex(0.70710678, 0.0), Complex(0.70710678, 0.0)}),
                    std::invalid_argument);  // off by ~3e-9, above NORM_TOL
    CHECK_THROWS_AS(entangled_state(std::vector<Complex>{1.0}),
                    std::invalid_argument);
  }
}

TEST_CASE("ghz_state and w_state carry the exact textbook amplitudes") {
  const StateVector ghz = ghz_state();
  CHECK(ghz.amplitudes()(0) == Complex(1.0 / std::sqrt(2.0), 0.0));
  CHECK(ghz.amplitudes()(7) == Complex(1.0 / std::sqrt(2.0), 0.0));
  for (int idx : {1, 2, 3, 4, 5, 6}) {
    CHECK(ghz.amplitudes()(idx) == Complex(0.0, 0.0));
  }
  CHECK(std::abs(ghz.norm() - 1.0) < 1e-12);

  const StateVector w = w_state();
  for (int idx : {1, 2, 4}) {
    CHECK(w.amplitudes()(idx) == Complex(1.0 / std::sqrt(3.0), 0.0));
  }
  for (int idx : {0, 3, 5, 6, 7}) {
    CHECK(w.amplitudes()(idx) == Complex(0.0, 0.0));
  }
  CHECK(std::abs(w.norm() - 1.0) < 1e-12);
}

TEST_CASE("certainty_verdict") {
  CHECK(certainty_verdict(
      OutcomeDistribution({1, 3}, {{{0, 0}, 0.5}, {{1, 1}, 0.5}})));
  CHECK_FALSE(certainty_verdict(OutcomeDistribution(
      {1, 3, 5},
      {{{0, 0, 1}, 1.0 / 3.0}, {{0, 1, 0}, 1.0 / 3.0}, {{1, 0, 0}, 1.0 / 3.0}})));
  // Determination does not require equal labels.
  CHECK(certainty_verdict(OutcomeDistribution({1, 3}, {{{0, 1}, 1.0}})));
  CHECK_THROWS_AS(certainty_verdict(OutcomeDistribution({1}, {{{0}, 1.0}})),
                  std::invalid_argument);
}

TEST_CASE("run_bipartite: Bell pair, inputs (0, 1)") {
  const Dim d(2);
  const BipartiteConfig cfg{d, uniform_alphas(2), BasisLabel(0, d),
                            BasisLabel(1, d)};
  const ProtocolResult result = run_bipartite(cfg);

  CHECK(std::abs(result.joint_ports.prob({0, 0}) - 0.5) < 1e-12);
  CHECK(std::abs(result.joint_ports.prob({1, 1}) - 0.5) < 1e-12);
  CHECK(result.joint_ports.prob({0, 1}) == 0.0);
  CHECK(result.joint_ports.prob({1, 0}) == 0.0);
  CHECK(result.certainty);

  REQUIRE(result.branches.size() == 2);
  // k=0: |0-0>|0> x |0-1>|0> = |0,0,1,0>; k=1: |1,1,0,1>.
  CHECK(result.branches[0].outcome == LabelTuple{0});
  CHECK(is_basis_ket(result.branches[0].post_state, {0, 0, 1, 0}));
  CHECK(result.branches[1].outcome == LabelTuple{1});
  CHECK(is_basis_ket(result.branches[1].post_state, {1, 1, 0, 1}));
  CHECK(std::abs(result.branches[0].probability - 0.5) < 1e-12);
  CHECK(std::abs(result.branches[1].probability - 0.5) < 1e-12);

  CHECK_FALSE(result.shots.has_value());
}

TEST_CASE("run_bipartite: single surviving term pins both ports") {
  const Dim d(3);
  const BipartiteConfig cfg{
      d, {1.0, 0.0, 0.0}, BasisLabel(2, d), BasisLabel(1, d)};
  const ProtocolResult result = run_bipartite(cfg);
  CHECK(result.joint_ports.prob({0, 0}) == 1.0);
  CHECK(result.alice_marginal.prob({0}) == 1.0);
  CHECK(result.certainty);
  REQUIRE(result.branches.size() == 1);
  // Alice system ends in |0-2 mod 3> = |1>, Bob's in |0-1 mod 3> = |2>.
  CHECK(is_basis_ket(result.branches[0].post_state, {1, 0, 2, 0}));
}

TEST_CASE("run_bipartite: D=4 phase ramp matches the full-space oracle") {
  const Dim d(4);
  std::vector<Complex> alphas;
  for (int j = 0; j < 4; ++j) {
    alphas.push_back(std::polar(0.5, j * std::numbers::pi / 7.0));
  }
  const BipartiteConfig cfg{d, alphas, BasisLabel(3, d), BasisLabel(1, d)};
  const ProtocolResult result = run_bipartite(cfg);

  for (int k = 0; k < 4; ++k) {
    CHECK(std::abs(result.joint_ports.prob({k, k}) - 0.25) < 1e-10);
  }
  for (const LabelTuple& t : result.joint_ports.support()) {
    CHECK(t[0] == t[1]);
  }

  // One brute-force 256x256 operator, applied to an independently indexed
  // initial vector.
  const oracle::Mat sorter = oracle::from_eigen(mqs(d).matrix());
  const oracle::Mat full = oracle::kron(sorter, sorter);
  const oracle::Vec initial = oracle::bipartite_initial(4, alphas, 3, 1);
  const oracle::Vec expected = oracle::matvec(full, initial);
  CHECK(oracle::max_diff(expected, result.final_state.amplitudes()) < 1e-12);
}

TEST_CASE("run_bipartite: perfect correlation for random amplitudes") {
  // Every dimension up to 8 and every input-port pair, with fresh random
  // amplitudes per run.
  SplitMix64 rng(2025);
  for (int d = 2; d <= 8; ++d) {
    const Dim dim(d);
    for (int m = 0; m < d; ++m) {
      for (int n = 0; n < d; ++n) {
        for (int trial = 0; trial < 2; ++trial) {
          const std::vector<Complex> alphas = oracle::random_alphas(d, rng);
          const BipartiteConfig cfg{dim, alphas, BasisLabel(m, dim),
                                    BasisLabel(n, dim)};
          const ProtocolResult result = run_bipartite(cfg);

          for (int k = 0; k < d; ++k) {
            CHECK(std::abs(result.joint_ports.prob({k, k}) -
                           std::norm(alphas[k])) < 1e-10);
            CHECK(std::abs(result.alice_marginal.prob({k}) -
                           std::norm(alphas[k])) < 1e-10);
          }
          for (const LabelTuple& t : result.joint_ports.support(0.0)) {
            CHECK(t[0] == t[1]);
          }
          CHECK(result.certainty);
        }
      }
    }
  }
}

TEST_CASE("run_bipartite: port statistics are independent of the input ports") {
  const Dim d(3);
  const std::vector<Complex> alphas = {Complex(0.5, 0.5), Complex(0.5, 0.0),
                                       Complex(0.0, 0.5)};
  std::vector<OutcomeDistribution> dists;
  for (int m = 0; m < 3; ++m) {
    for (int n = 0; n < 3; ++n) {
      dists.push_back(run_bipartite({d, alphas, BasisLabel(m, d),
                                     BasisLabel(n, d)})
                          .joint_ports);
    }
  }
  for (const auto& dist : dists) {
    for (const auto& [labels, p] : dists.front().probs()) {
      CHECK(std::abs(dist.prob(labels) - p) < 1e-12);
    }
  }
}

TEST_CASE("run_bipartite: config validation") {
  const Dim d(3);
  CHECK_THROWS_AS(
      run_bipartite({d, uniform_alphas(2), BasisLabel(0, d), BasisLabel(0, d)}),
      std::invalid_argument);
  CHECK_THROWS_AS(run_bipartite({d,
                                 {Complex(1.0, 0.0), Complex(1.0, 0.0),
                                  Complex(1.0, 0.0)},
                                 BasisLabel(0, d),
                                 BasisLabel(0, d)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_bipartite({d, uniform_alphas(3), BasisLabel(0, Dim(2)),
                                 BasisLabel(0, d)}),
                  std::invalid_argument);
}

TEST_CASE("run_tripartite: GHZ determines every port, all 8 input triples") {
  const Dim two(2);
  for (int m = 0; m < 2; ++m) {
    for (int n = 0; n < 2; ++n) {
      for (int p = 0; p < 2; ++p) {
        const TripartiteConfig cfg{TripartiteKind::GHZ, BasisLabel(m, two),
                                   BasisLabel(n, two), BasisLabel(p, two)};
        const ProtocolResult result = run_tripartite(cfg);

        CHECK(std::abs(result.joint_ports.prob({0, 0, 0}) - 0.5) < 1e-12);
        CHECK(std::abs(result.joint_ports.prob({1, 1, 1}) - 0.5) < 1e-12);
        for (const auto& [labels, prob] : result.joint_ports.probs()) {
          if (labels != LabelTuple{0, 0, 0} && labels != LabelTuple{1, 1, 1}) {
            CHECK(prob == 0.0);
          }
        }
        CHECK(result.certainty);

        REQUIRE(result.branches.size() == 2);
        CHECK(is_basis_ket(result.branches[0].post_state,
                           {m, 0, n, 0, p, 0}));
        CHECK(is_basis_ket(result.branches[1].post_state,
                           {1 - m, 1, 1 - n, 1, 1 - p, 1}));
      }
    }
  }
}

TEST_CASE("run_tripartite: GHZ spot checks from the worked examples") {
  const Dim two(2);
  // Inputs (0,0,0), Alice outcome 1: every party ends in (|1>|1>).
  const ProtocolResult a = run_tripartite({TripartiteKind::GHZ,
                                           BasisLabel(0, two),
                                           BasisLabel(0, two),
                                           BasisLabel(0, two)});
  CHECK(std::abs(a.branches[1].probability - 0.5) < 1e-12);
  CHECK(is_basis_ket(a.branches[1].post_state, {1, 1, 1, 1, 1, 1}));

  // Inputs (1,1,1), Alice outcome 0: ports stay |0>, systems keep the inputs.
  const ProtocolResult b = run_tripartite({TripartiteKind::GHZ,
                                           BasisLabel(1, two),
                                           BasisLabel(1, two),
                                           BasisLabel(1, two)});
  CHECK(is_basis_ket(b.branches[0].post_state, {1, 0, 1, 0, 1, 0}));
}

TEST_CASE("run_tripartite: W fails to determine the other ports") {
  const Dim two(2);
  for (int m = 0; m < 2; ++m) {
    for (int n = 0; n < 2; ++n) {
      for (int p = 0; p < 2; ++p) {
        const TripartiteConfig cfg{TripartiteKind::W, BasisLabel(m, two),
                                   BasisLabel(n, two), BasisLabel(p, two)};
        const ProtocolResult result = run_tripartite(cfg);

        const double third = 1.0 / 3.0;
        CHECK(std::abs(result.joint_ports.prob({0, 0, 1}) - third) < 1e-12);
        CHECK(std::abs(result.joint_ports.prob({0, 1, 0}) - third) < 1e-12);
        CHECK(std::abs(result.joint_ports.prob({1, 0, 0}) - third) < 1e-12);
        CHECK_FALSE(result.certainty);

        REQUIRE(result.branches.size() == 2);
        // Alice outcome 0 keeps two live Bob/Charlie port pairs.
        const OutcomeDistribution rest =
            marginal(result.branches[0].post_state, {3, 5});
        CHECK(rest.support().size() == 2);
        CHECK(std::abs(rest.prob({0, 1}) - 0.5) < 1e-12);
        CHECK(std::abs(rest.prob({1, 0}) - 0.5) < 1e-12);
        CHECK(std::abs(result.branches[0].probability - 2.0 / 3.0) < 1e-12);

        // Alice outcome 1 is the lone third term of the final state.
        CHECK(is_basis_ket(result.branches[1].post_state,
                           {1 - m, 1, n, 0, p, 0}));
        CHECK(std::abs(result.branches[1].probability - third) < 1e-12);
      }
    }
  }
}

TEST_CASE("run_tripartite: collapsing the full port tuple isolates each term") {
  const Dim two(2);
  const int m = 1, n = 0, p = 1;

  const ProtocolResult ghz = run_tripartite({TripartiteKind::GHZ,
                                             BasisLabel(m, two),
                                             BasisLabel(n, two),
                                             BasisLabel(p, two)});
  const CollapseResult g0 =
      collapse(ghz.final_state, {1, 3, 5}, {0, 0, 0});
  CHECK(is_basis_ket(g0.post_state, {m, 0, n, 0, p, 0}));
  const CollapseResult g1 =
      collapse(ghz.final_state, {1, 3, 5}, {1, 1, 1});
  CHECK(is_basis_ket(g1.post_state, {1 - m, 1, 1 - n, 1, 1 - p, 1}));

  const ProtocolResult w = run_tripartite({TripartiteKind::W,
                                           BasisLabel(m, two),
                                           BasisLabel(n, two),
                                           BasisLabel(p, two)});
  const CollapseResult w001 = collapse(w.final_state, {1, 3, 5}, {0, 0, 1});
  CHECK(is_basis_ket(w001.post_state, {m, 0, n, 0, 1 - p, 1}));
  const CollapseResult w010 = collapse(w.final_state, {1, 3, 5}, {0, 1, 0});
  CHECK(is_basis_ket(w010.post_state, {m, 0, 1 - n, 1, p, 0}));
  const CollapseResult w100 = collapse(w.final_state, {1, 3, 5}, {1, 0, 0});
  CHECK(is_basis_ket(w100.post_state, {1 - m, 1, n, 0, p, 0}));
}

TEST_CASE("run_tripartite: matches the full-space oracle") {
  const Dim two(2);
  const double rt2 = 1.0 / std::sqrt(2.0);
  const double rt3 = 1.0 / std::sqrt(3.0);
  const oracle::Mat sorter = oracle::from_eigen(mqs(two).matrix());
  const oracle::Mat full =
      oracle::kron(oracle::kron(sorter, sorter), sorter);

  for (int m = 0; m < 2; ++m) {
    for (int n = 0; n < 2; ++n) {
      for (int p = 0; p < 2; ++p) {
        const ProtocolResult ghz = run_tripartite({TripartiteKind::GHZ,
                                                   BasisLabel(m, two),
                                                   BasisLabel(n, two),
                                                   BasisLabel(p, two)});
        const oracle::Vec ghz_expected = oracle::matvec(
            full, oracle::tripartite_initial(
                      {{0, 0, 0, rt2}, {1, 1, 1, rt2}}, m, n, p));
        CHECK(oracle::max_diff(ghz_expected, ghz.final_state.amplitudes()) <
              1e-12);

        const ProtocolResult w = run_tripartite({TripartiteKind::W,
                                                 BasisLabel(m, two),
                                                 BasisLabel(n, two),
                                                 BasisLabel(p, two)});
        const oracle::Vec w_expected = oracle::matvec(
            full, oracle::tripartite_initial(
                      {{0, 0, 1, rt3}, {0, 1, 0, rt3}, {1, 0, 0, rt3}}, m, n,
                      p));
        CHECK(oracle::max_diff(w_expected, w.final_state.amplitudes()) <
              1e-12);
      }
    }
  }
}

TEST_CASE("run_tripartite: rejects non-qubit input ports") {
  CHECK_THROWS_AS(run_tripartite({TripartiteKind::GHZ, BasisLabel(0, Dim(3)),
                                  BasisLabel(0, Dim(2)), BasisLabel(0, Dim(2))}),
                  std::invalid_argument);
}

TEST_CASE("protocol runners attach shot records on request") {
  const Dim d(2);
  const BipartiteConfig cfg{d, uniform_alphas(2), BasisLabel(0, d),
                            BasisLabel(0, d)};
  const ProtocolResult result =
      run_bipartite(cfg, ShotPlan{100000, DEFAULT_SEED});
  REQUIRE(result.shots.has_value());
  CHECK(result.shots->seed == DEFAULT_SEED);
  CHECK(result.shots->shots == 100000);
  // Frozen cross-implementation fixture for the uniform D=2 run, seed 42.
  CHECK(result.shots->counts.at({0, 0}) == 50064);
  CHECK(result.shots->counts.at({1, 1}) == 49936);
  CHECK(result.shots->counts.at({0, 1}) == 0);
  CHECK(result.shots->counts.at({1, 0}) == 0);

  const ProtocolResult tri = run_tripartite(
      {TripartiteKind::W, BasisLabel(0, d), BasisLabel(0, d), BasisLabel(0, d)},
      ShotPlan{999, 7});
  REQUIRE(tri.shots.has_value());
  std::int64_t total = 0;
  for (const auto& [labels, c] : tri.shots->counts) {
    total += c;
  }
  CHECK(total == 999);
}
