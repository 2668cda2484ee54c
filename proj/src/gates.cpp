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

#include "qsorter/gates.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qsorter {

namespace {

double unitarity_defect(const Eigen::MatrixXcd& m) {
  const Eigen::MatrixXcd gram = m.adjoint() * m;
  const Eigen::MatrixXcd identity =
      Eigen::MatrixXcd::Identity(m.cols(), m.cols());
  return (gram - identity).cwiseAbs().maxCoeff();
}

}  // namespace

LinearMap::LinearMap(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.size() == 0) {
    throw std::invalid_argument("LinearMap: empty matrix");
  }
}

Unitary::Unitary(Eigen::MatrixXcd entries, std::string label)
    : entries_(std::move(entries)), label_(std::move(label)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw std::invalid_argument("Unitary '" + label_ + "': matrix not square");
  }
  const double defect = unitarity_defect(entries_);
  if (defect > UNITARY_TOL) {
    throw std::invalid_argument("Unitary '" + label_ +
                                "': fails U†U = I, defect " +
                                std::to_string(defect));
  }
}

bool is_unitary(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("is_unitary: matrix not square");
  }
  return unitarity_defect(m) <= tol;
}

bool is_unitary(const LinearMap& m, double tol) {
  return is_unitary(m.matrix(), tol);
}

Unitary pauli_x(Dim d) {
  const int n = d.value();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    m((j + 1) % n, j) = 1.0;
  }
  return Unitary(std::move(m), "X_" + std::to_string(n));
}

Unitary adjoint(const Unitary& u) {
  return Unitary(u.matrix().adjoint(), "adj(" + u.label() + ")");
}

Unitary controlled(const Unitary& u, Dim control_dim) {
  const int c = control_dim.value();
  const int t = u.dim();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(c * t, c * t);
  Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(t, t);
  for (int s = 0; s < c; ++s) {
    m.block(s * t, s * t, t, t) = power;
    power = power * u.matrix();
  }
  return Unitary(std::move(m), "C(" + u.label() + ")");
}

Unitary controlled_rev(const Unitary& u, Dim control_dim) {
  const int c = control_dim.value();
  const int t = u.dim();
  // First register is the target, second is the control, so the index of
  // |s>|k> is s*c + k and entry ((s',k),(s,k)) carries (U^k)_{s's}.
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(t * c, t * c);
  Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(t, t);
  for (int k = 0; k < c; ++k) {
    for (int s = 0; s < t; ++s) {
      for (int s_out = 0; s_out < t; ++s_out) {
        m(s_out * c + k, s * c + k) = power(s_out, s);
      }
    }
    power = power * u.matrix();
  }
  return Unitary(std::move(m), "C~(" + u.label() + ")");
}

Unitary swap_gate(Dim d) {
  const int n = d.value();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n * n, n * n);
  for (int s = 0; s < n; ++s) {
    for (int k = 0; k < n; ++k) {
      m(k * n + s, s * n + k) = 1.0;
    }
  }
  return Unitary(std::move(m), "SWAP_" + std::to_string(n));
}

Unitary sqs(Dim d) {
  return Unitary(controlled(pauli_x(d), d).matrix(),
                 "SQS_" + std::to_string(d.value()));
}

Unitary mqs(Dim d) {
  const int n = d.value();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n * n, n * n);
  for (int s = 0; s < n; ++s) {
    for (int k = 0; k < n; ++k) {
      const int s_out = ((s - k) % n + n) % n;
      m(s_out * n + s, s * n + k) = 1.0;
    }
  }
  return Unitary(std::move(m), "MQS_" + std::to_string(n));
}

LinearMap perfect_sorter_map(Dim d) {
  const int n = d.value();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n * n, n * n);
  for (int s = 0; s < n; ++s) {
    for (int k = 0; k < n; ++k) {
      m(s * n + s, s * n + k) = 1.0;
    }
  }
  return LinearMap(std::move(m));
}

StateVector apply(const GateApplication& app, const StateVector& state) {
  const RegisterLayout& layout = state.layout();
  const std::vector<std::size_t>& targets = app.targets;

  if (targets.empty()) {
    throw std::invalid_argument("apply: no target registers");
  }
  std::size_t gate_dim = 1;
  for (std::size_t t : targets) {
    if (t >= layout.register_count()) {
      throw std::invalid_argument("apply: register index " +
                                  std::to_string(t) + " out of range");
    }
    if (std::count(targets.begin(), targets.end(), t) != 1) {
      throw std::invalid_argument("apply: duplicate target register " +
                                  std::to_string(t));
    }
    gate_dim *= static_cast<std::size_t>(layout.at(t).dim.value());
  }
  if (gate_dim != static_cast<std::size_t>(app.gate.dim())) {
    throw std::invalid_argument(
        "apply: gate dimension " + std::to_string(app.gate.dim()) +
        " does not match target registers (product " +
        std::to_string(gate_dim) + ")");
  }

  // Flat-index offset of every gate-space index, with targets[0] as the most
  // significant digit of the gate's own mixed radix.
  std::vector<std::size_t> gate_offset(gate_dim);
  for (std::size_t g = 0; g < gate_dim; ++g) {
    std::size_t rem = g;
    std::size_t offset = 0;
    for (std::size_t i = targets.size(); i-- > 0;) {
      const auto dim = static_cast<std::size_t>(layout.at(targets[i]).dim.value());
      offset += (rem % dim) * layout.stride(targets[i]);
      rem /= dim;
    }
    gate_offset[g] = offset;
  }

  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < layout.register_count(); ++i) {
    if (std::find(targets.begin(), targets.end(), i) == targets.end()) {
      rest.push_back(i);
    }
  }

  const Eigen::VectorXcd& in = state.amplitudes();
  Eigen::VectorXcd out(in.size());
  Eigen::VectorXcd slice(static_cast<Eigen::Index>(gate_dim));

  std::vector<int> rest_labels(rest.size(), 0);
  const std::size_t rest_count = layout.total_dim() / gate_dim;
  for (std::size_t r = 0; r < rest_count; ++r) {
    std::size_t base = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      base += static_cast<std::size_t>(rest_labels[i]) * layout.stride(rest[i]);
    }
    for (std::size_t g = 0; g < gate_dim; ++g) {
      slice(static_cast<Eigen::Index>(g)) =
          in(static_cast<Eigen::Index>(base + gate_offset[g]));
    }
    slice = app.gate.matrix() * slice;
    for (std::size_t g = 0; g < gate_dim; ++g) {
      out(static_cast<Eigen::Index>(base + gate_offset[g])) =
          slice(static_cast<Eigen::Index>(g));
    }
    // Mixed-radix increment of the non-target labels, last register fastest.
    for (std::size_t i = rest.size(); i-- > 0;) {
      if (++rest_labels[i] < layout.at(rest[i]).dim.value()) {
        break;
      }
      rest_labels[i] = 0;
    }
  }
  return StateVector(layout, std::move(out));
}

StateVector apply(const Unitary& gate, std::vector<std::size_t> targets,
                  const StateVector& state) {
  return apply(GateApplication{gate, std::move(targets)}, state);
}

}  // namespace qsorter
