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

#include <cmath>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "qsorter/report.hpp"
#include "subprocess.hpp"

using nlohmann::json;
using subprocess::run_cli;

TEST_CASE("cli: bipartite text run with near-normalized flag input") {
  const auto r = run_cli(
      "bipartite --dim 2 --alphas \"0.70710678,0;0.70710678,0\" "
      "--input-a 0 --input-b 1");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("certainty: true") != std::string::npos);
  CHECK(r.stdout_text.find("(0, 0)  0.5") != std::string::npos);
  CHECK(r.stdout_text.find("(1, 1)  0.5") != std::string::npos);
}

TEST_CASE("cli: bipartite JSON schema and values") {
  const auto r = run_cli(
      "bipartite --dim 2 --alphas \"0.70710678,0;0.70710678,0\" "
      "--input-a 0 --input-b 1 --format json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.stdout_text);
  for (const char* key : {"protocol", "dim", "alphas", "inputs",
                          "distribution", "certainty", "branches"}) {
    INFO(key);
    CHECK(j.contains(key));
  }
  CHECK(j["certainty"] == true);
  double p00 = -1.0, p11 = -1.0;
  for (const auto& entry : j["distribution"]) {
    if (entry["labels"] == json::array({0, 0})) {
      p00 = entry["prob"].get<double>();
    }
    if (entry["labels"] == json::array({1, 1})) {
      p11 = entry["prob"].get<double>();
    }
  }
  CHECK(std::abs(p00 - 0.5) < 1e-9);
  CHECK(std::abs(p11 - 0.5) < 1e-9);
}

TEST_CASE("cli: defaults put both particles on input port 0") {
  const auto r =
      run_cli("bipartite --dim 3 --alphas \"1,0;0,0;0,0\" --format json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.stdout_text);
  CHECK(j["inputs"]["a"] == 0);
  CHECK(j["inputs"]["b"] == 0);
  for (const auto& entry : j["distribution"]) {
    const double expected =
        entry["labels"] == json::array({0, 0}) ? 1.0 : 0.0;
    CHECK(entry["prob"].get<double>() == expected);
  }
}

TEST_CASE("cli: shot sampling is deterministic per seed") {
  const std::string args =
      "bipartite --dim 2 --alphas \"0.70710678,0;0.70710678,0\" "
      "--shots 100000 --seed 42 --format json";
  const auto r = run_cli(args);
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.stdout_text);
  REQUIRE(j.contains("shots"));
  CHECK(j["shots"]["seed"] == 42);
  // Frozen regression counts for the shipped default seed.
  for (const auto& entry : j["shots"]["counts"]) {
    if (entry["labels"] == json::array({0, 0})) {
      CHECK(entry["count"] == 50064);
    }
    if (entry["labels"] == json::array({1, 1})) {
      CHECK(entry["count"] == 49936);
    }
  }
  // --seed omitted means the shipped default seed, i.e. the same record.
  const auto defaulted = run_cli(
      "bipartite --dim 2 --alphas \"0.70710678,0;0.70710678,0\" "
      "--shots 100000 --format json");
  REQUIRE(defaulted.exit_code == 0);
  CHECK(json::parse(defaulted.stdout_text)["shots"] == j["shots"]);
}

TEST_CASE("cli: re-running the JSON config echo reproduces the distribution") {
  const auto r = run_cli(
      "bipartite --dim 4 --alphas \"0.5,0;0,0.5;-0.5,0;0,-0.5\" "
      "--input-a 2 --input-b 3 --format json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.stdout_text);
  const qsorter::BipartiteConfig cfg = qsorter::bipartite_config_from_json(j);
  const qsorter::ProtocolResult rerun = qsorter::run_bipartite(cfg);
  for (const auto& entry : j["distribution"]) {
    CHECK(rerun.joint_ports.prob(entry["labels"].get<qsorter::LabelTuple>()) ==
          entry["prob"].get<double>());
  }
}

TEST_CASE("cli: tripartite ghz and w runs") {
  const auto ghz = run_cli(
      "tripartite --state ghz --input-a 0 --input-b 0 --input-c 0 "
      "--format json");
  REQUIRE(ghz.exit_code == 0);
  const json gj = json::parse(ghz.stdout_text);
  CHECK(gj["protocol"] == "ghz");
  CHECK(gj["certainty"] == true);
  for (const auto& entry : gj["distribution"]) {
    const bool live = entry["labels"] == json::array({0, 0, 0}) ||
                      entry["labels"] == json::array({1, 1, 1});
    if (live) {
      CHECK(std::abs(entry["prob"].get<double>() - 0.5) < 1e-12);
    } else {
      CHECK(entry["prob"].get<double>() == 0.0);
    }
  }

  const auto w = run_cli("tripartite --state w --format json");
  REQUIRE(w.exit_code == 0);
  const json wj = json::parse(w.stdout_text);
  CHECK(wj["certainty"] == false);
  int live_outcomes = 0;
  for (const auto& entry : wj["distribution"]) {
    if (entry["prob"].get<double>() > 0.0) {
      ++live_outcomes;
      CHECK(std::abs(entry["prob"].get<double>() - 1.0 / 3.0) < 1e-12);
    }
  }
  CHECK(live_outcomes == 3);
}

TEST_CASE("cli: usage errors exit with code 2") {
  CHECK(run_cli("tripartite --state ghz --input-c 2").exit_code == 2);
  CHECK(run_cli("bipartite --dim 2 --alphas \"1,0;1,0\"").exit_code == 2);
  CHECK(run_cli("bipartite --dim 2 --alphas \"1,0\"").exit_code == 2);
  CHECK(run_cli("bipartite --dim 2 --alphas \"1;0\"").exit_code == 2);
  CHECK(run_cli("bipartite --dim 2 --alphas \"x,0;1,0\"").exit_code == 2);
  CHECK(run_cli("bipartite --dim 1 --alphas \"1,0\"").exit_code == 2);
  CHECK(run_cli("bipartite --dim 2 --alphas \"1,0;0,0\" --input-a 5")
            .exit_code == 2);
  CHECK(run_cli("bipartite").exit_code == 2);
  CHECK(run_cli("tripartite --state xyz").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("bipartite --dim 2 --alphas \"1,0;0,0\" --format yaml")
            .exit_code == 2);
  CHECK(run_cli("bipartite --dim 2 --alphas \"1,0;0,0\" --shots 0")
            .exit_code == 2);
}

TEST_CASE("cli: help exits cleanly") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("bipartite --help").exit_code == 0);
}

TEST_CASE("cli: verify runs the check matrix") {
  const auto r = run_cli("verify");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("all checks passed") != std::string::npos);
  CHECK(r.stdout_text.find("D=8") != std::string::npos);

  const auto small = run_cli("verify --max-dim 3");
  CHECK(small.exit_code == 0);
  CHECK(small.stdout_text.find("D=2") != std::string::npos);
  CHECK(small.stdout_text.find("D=3") != std::string::npos);
  CHECK(small.stdout_text.find("D=4") == std::string::npos);

  CHECK(run_cli("verify --max-dim 99").exit_code == 2);
}
