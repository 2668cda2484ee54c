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

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsorter/protocols.hpp"
#include "qsorter/report.hpp"
#include "qsorter/rng.hpp"
#include "qsorter/verify.hpp"

namespace {

// Command-line amplitudes arrive with at most a handful of printed digits, so
// the strict library-side normalization gate (1e-10) is unreachable for them.
// The CLI accepts this much slack and rescales to exact unit norm.
constexpr double CLI_NORM_TOL = 1e-6;

double parse_double_strict(std::string_view text) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("bad number '" + std::string(text) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

// "re,im;re,im;..." -> amplitude list; must supply exactly `dim` pairs.
std::vector<qsorter::Complex> parse_alphas(const std::string& text, int dim) {
  std::vector<qsorter::Complex> alphas;
  std::string_view rest = text;
  while (true) {
    const std::size_t sep = rest.find(';');
    const std::string_view item = trim(rest.substr(0, sep));
    const std::size_t comma = item.find(',');
    if (comma == std::string_view::npos) {
      throw std::invalid_argument("--alphas: expected 're,im' pairs");
    }
    alphas.emplace_back(parse_double_strict(trim(item.substr(0, comma))),
                        parse_double_strict(trim(item.substr(comma + 1))));
    if (sep == std::string_view::npos) {
      break;
    }
    rest.remove_prefix(sep + 1);
  }
  if (static_cast<int>(alphas.size()) != dim) {
    throw std::invalid_argument("--alphas: expected " + std::to_string(dim) +
                                " pairs, got " +
                                std::to_string(alphas.size()));
  }

  double total = 0.0;
  for (const auto& a : alphas) {
    total += std::norm(a);
  }
  if (std::abs(total - 1.0) > CLI_NORM_TOL) {
    throw std::invalid_argument(
        "--alphas: not normalized (sum of |alpha|^2 is " +
        std::to_string(total) + ")");
  }
  const double scale = 1.0 / std::sqrt(total);
  for (auto& a : alphas) {
    a *= scale;
  }
  return alphas;
}

void print_report(const qsorter::RunReport& report, const std::string& format) {
  if (format == "json") {
    std::cout << qsorter::report_to_json(report).dump(2) << '\n';
  } else {
    std::cout << qsorter::report_to_text(report);
  }
}

struct ShotFlags {
  std::int64_t shots = 0;
  std::uint64_t seed = qsorter::DEFAULT_SEED;
  CLI::Option* shots_opt = nullptr;

  void add_to(CLI::App& cmd) {
    shots_opt = cmd.add_option("--shots", shots, "Sample this many detector clicks")
                    ->check(CLI::PositiveNumber);
    cmd.add_option("--seed", seed,
                   "Sampling seed (default " +
                       std::to_string(qsorter::DEFAULT_SEED) + ")");
  }

  std::optional<qsorter::ShotPlan> plan() const {
    if (shots_opt != nullptr && shots_opt->count() > 0) {
      return qsorter::ShotPlan{shots, seed};
    }
    return std::nullopt;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "quDit sorter simulator: remote output-port determination protocols"};
  app.require_subcommand(1);

  // bipartite
  auto* bip = app.add_subcommand(
      "bipartite", "Two parties, diagonal entangled quDit state, one sorter each");
  int dim = 2;
  std::string alphas_text;
  int input_a = 0;
  int input_b = 0;
  int input_c = 0;
  std::string format = "text";
  ShotFlags bip_shots;
  bip->add_option("--dim", dim, "Levels per quDit (2..16)")
      ->required()
      ->check(CLI::Range(2, 16));
  bip->add_option("--alphas", alphas_text,
                  "Entangled-state amplitudes as 're,im;re,im;...', one pair "
                  "per level; must be normalized to within 1e-6 (rescaled to "
                  "exact unit norm)")
      ->required();
  bip->add_option("--input-a", input_a, "Alice input port (default 0)");
  bip->add_option("--input-b", input_b, "Bob input port (default 0)");
  bip_shots.add_to(*bip);
  bip->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));

  // tripartite
  auto* tri = app.add_subcommand(
      "tripartite", "Three qubit parties sharing the GHZ or W state");
  std::string state_name;
  ShotFlags tri_shots;
  tri->add_option("--state", state_name, "Shared state")
      ->required()
      ->check(CLI::IsMember({"ghz", "w"}));
  tri->add_option("--input-a", input_a, "Alice input port (0 or 1)");
  tri->add_option("--input-b", input_b, "Bob input port (0 or 1)");
  tri->add_option("--input-c", input_c, "Charlie input port (0 or 1)");
  tri_shots.add_to(*tri);
  tri->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));

  // verify
  auto* ver = app.add_subcommand(
      "verify", "Run the sorter self-checks and print the pass/fail matrix");
  int max_dim = 8;
  ver->add_option("--max-dim", max_dim, "Largest dimension to check (default 8)")
      ->check(CLI::Range(2, 16));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (bip->parsed()) {
      const qsorter::Dim d(dim);
      qsorter::BipartiteConfig cfg{d, parse_alphas(alphas_text, dim),
                                   qsorter::BasisLabel(input_a, d),
                                   qsorter::BasisLabel(input_b, d)};
      auto result = qsorter::run_bipartite(cfg, bip_shots.plan());
      print_report(qsorter::make_bipartite_report(cfg, std::move(result)),
                   format);
      return 0;
    }
    if (tri->parsed()) {
      const qsorter::Dim two(2);
      qsorter::TripartiteConfig cfg{state_name == "ghz"
                                        ? qsorter::TripartiteKind::GHZ
                                        : qsorter::TripartiteKind::W,
                                    qsorter::BasisLabel(input_a, two),
                                    qsorter::BasisLabel(input_b, two),
                                    qsorter::BasisLabel(input_c, two)};
      auto result = qsorter::run_tripartite(cfg, tri_shots.plan());
      print_report(qsorter::make_tripartite_report(cfg, std::move(result)),
                   format);
      return 0;
    }
    if (ver->parsed()) {
      const qsorter::VerifyReport report =
          qsorter::run_verification({max_dim, {}});
      qsorter::write_matrix(std::cout, report);
      if (!report.all_pass()) {
        const qsorter::CheckResult* failure = report.first_failure();
        std::cerr << "verification failed: " << failure->name << " at D="
                  << failure->dim << '\n';
        return 1;
      }
      std::cout << "all checks passed\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
