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

#include "qsorter/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace qsorter {

namespace {

std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

std::string fmt_labels(const LabelTuple& labels) {
  std::string out = "(";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += std::to_string(labels[i]);
  }
  return out + ")";
}

std::string fmt_ket(const std::vector<int>& labels) {
  std::string out = "|";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += std::to_string(labels[i]);
  }
  return out + ">";
}

nlohmann::json labels_json(const LabelTuple& labels) {
  return nlohmann::json(labels);
}

nlohmann::json state_terms_json(const StateVector& state) {
  nlohmann::json terms = nlohmann::json::array();
  const RegisterLayout& layout = state.layout();
  std::vector<int> labels(layout.register_count());
  for (std::size_t idx = 0; idx < layout.total_dim(); ++idx) {
    const Complex amp = state.amplitudes()(static_cast<Eigen::Index>(idx));
    if (amp == Complex(0.0, 0.0)) {
      continue;
    }
    layout.decode(idx, labels);
    terms.push_back({{"labels", labels}, {"amp", {amp.real(), amp.imag()}}});
  }
  return terms;
}

}  // namespace

RunReport make_bipartite_report(const BipartiteConfig& cfg,
                                ProtocolResult result) {
  return RunReport{"bipartite",
                   cfg.dim.value(),
                   cfg.alphas,
                   {cfg.input_a.value(), cfg.input_b.value()},
                   std::move(result)};
}

RunReport make_tripartite_report(const TripartiteConfig& cfg,
                                 ProtocolResult result) {
  return RunReport{
      cfg.kind == TripartiteKind::GHZ ? "ghz" : "w",
      2,
      {},
      {cfg.input_a.value(), cfg.input_b.value(), cfg.input_c.value()},
      std::move(result)};
}

nlohmann::json report_to_json(const RunReport& report) {
  nlohmann::json j;
  j["protocol"] = report.protocol;
  j["dim"] = report.dim;
  if (!report.alphas.empty()) {
    nlohmann::json alphas = nlohmann::json::array();
    for (const Complex& a : report.alphas) {
      alphas.push_back({a.real(), a.imag()});
    }
    j["alphas"] = alphas;
  }
  nlohmann::json inputs;
  const char* names[] = {"a", "b", "c"};
  for (std::size_t i = 0; i < report.inputs.size(); ++i) {
    inputs[names[i]] = report.inputs[i];
  }
  j["inputs"] = inputs;

  nlohmann::json dist = nlohmann::json::array();
  for (const auto& [labels, p] : report.result.joint_ports.probs()) {
    dist.push_back({{"labels", labels_json(labels)}, {"prob", p}});
  }
  j["distribution"] = dist;
  j["certainty"] = report.result.certainty;

  nlohmann::json branches = nlohmann::json::array();
  for (const CollapseResult& branch : report.result.branches) {
    branches.push_back({{"outcome", branch.outcome[0]},
                        {"probability", branch.probability},
                        {"terms", state_terms_json(branch.post_state)}});
  }
  j["branches"] = branches;

  if (report.result.shots.has_value()) {
    const ShotRecord& record = *report.result.shots;
    nlohmann::json counts = nlohmann::json::array();
    for (const auto& [labels, c] : record.counts) {
      counts.push_back({{"labels", labels_json(labels)}, {"count", c}});
    }
    j["shots"] = {{"seed", record.seed}, {"counts", counts}};
  }
  return j;
}

std::string report_to_text(const RunReport& report) {
  std::ostringstream os;
  os << "protocol: " << report.protocol << '\n';
  os << "dim: " << report.dim << '\n';
  if (!report.alphas.empty()) {
    os << "alphas:";
    for (const Complex& a : report.alphas) {
      os << " (" << fmt_double(a.real()) << ", " << fmt_double(a.imag())
         << ")";
    }
    os << '\n';
  }
  os << "inputs:";
  const char* names[] = {"a", "b", "c"};
  for (std::size_t i = 0; i < report.inputs.size(); ++i) {
    os << ' ' << names[i] << '=' << report.inputs[i];
  }
  os << '\n';

  const RegisterLayout& layout = report.result.final_state.layout();
  os << "joint ports (";
  const auto& regs = report.result.joint_ports.registers();
  for (std::size_t i = 0; i < regs.size(); ++i) {
    os << (i > 0 ? ", " : "") << register_name(layout, regs[i]);
  }
  os << "):\n";
  for (const auto& [labels, p] : report.result.joint_ports.probs()) {
    os << "  " << fmt_labels(labels) << "  " << fmt_double(p) << '\n';
  }
  os << "certainty: " << (report.result.certainty ? "true" : "false") << '\n';

  os << "branches:\n";
  for (const CollapseResult& branch : report.result.branches) {
    os << "  outcome " << branch.outcome[0] << "  prob "
       << fmt_double(branch.probability) << "  state:";
    const StateVector& post = branch.post_state;
    std::vector<int> labels(post.layout().register_count());
    for (std::size_t idx = 0; idx < post.layout().total_dim(); ++idx) {
      const Complex amp = post.amplitudes()(static_cast<Eigen::Index>(idx));
      if (amp == Complex(0.0, 0.0)) {
        continue;
      }
      post.layout().decode(idx, labels);
      os << " (" << fmt_double(amp.real()) << ", " << fmt_double(amp.imag())
         << ")" << fmt_ket(labels);
    }
    os << '\n';
  }

  if (report.result.shots.has_value()) {
    const ShotRecord& record = *report.result.shots;
    os << "shots: " << record.shots << "  seed: " << record.seed << '\n';
    for (const auto& [labels, c] : record.counts) {
      os << "  " << fmt_labels(labels) << "  " << c << '\n';
    }
  }
  return os.str();
}

BipartiteConfig bipartite_config_from_json(const nlohmann::json& j) {
  if (j.at("protocol").get<std::string>() != "bipartite") {
    throw std::invalid_argument("config: not a bipartite report");
  }
  const Dim d(j.at("dim").get<int>());
  std::vector<Complex> alphas;
  for (const auto& pair : j.at("alphas")) {
    alphas.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  }
  return BipartiteConfig{d, std::move(alphas),
                         BasisLabel(j.at("inputs").at("a").get<int>(), d),
                         BasisLabel(j.at("inputs").at("b").get<int>(), d)};
}

TripartiteConfig tripartite_config_from_json(const nlohmann::json& j) {
  const std::string protocol = j.at("protocol").get<std::string>();
  if (protocol != "ghz" && protocol != "w") {
    throw std::invalid_argument("config: not a tripartite report");
  }
  const Dim two(2);
  return TripartiteConfig{
      protocol == "ghz" ? TripartiteKind::GHZ : TripartiteKind::W,
      BasisLabel(j.at("inputs").at("a").get<int>(), two),
      BasisLabel(j.at("inputs").at("b").get<int>(), two),
      BasisLabel(j.at("inputs").at("c").get<int>(), two)};
}

}  // namespace qsorter
