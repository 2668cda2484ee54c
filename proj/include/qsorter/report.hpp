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

#ifndef QSORTER_REPORT_HPP
#define QSORTER_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "qsorter/protocols.hpp"

namespace qsorter {

/// Self-contained run record: the config echo is enough to re-run and get
/// the identical analytic distribution.
struct RunReport {
  std::string protocol;  // "bipartite" | "ghz" | "w"
  int dim = 0;
  std::vector<Complex> alphas;  // bipartite only
  std::vector<int> inputs;      // a, b[, c]
  ProtocolResult result;
};

RunReport make_bipartite_report(const BipartiteConfig& cfg,
                                ProtocolResult result);
RunReport make_tripartite_report(const TripartiteConfig& cfg,
                                 ProtocolResult result);

/// JSON view. Keys: protocol, dim, alphas, inputs, distribution (array of
/// {labels, prob}), certainty, branches, shots {seed, counts}. Numbers are
/// emitted in round-trip form.
nlohmann::json report_to_json(const RunReport& report);

/// Plain-text view; probabilities printed with 15 significant digits.
std::string report_to_text(const RunReport& report);

/// Rebuild configs from a report's config echo (for re-running).
BipartiteConfig bipartite_config_from_json(const nlohmann::json& j);
TripartiteConfig tripartite_config_from_json(const nlohmann::json& j);

}  // namespace qsorter

#endif  // QSORTER_REPORT_HPP
