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

#include "qsorter/hilbert.hpp"

#include <stdexcept>
#include <utility>

namespace qsorter {

Dim::Dim(int value) : value_(value) {
  if (value < 2) {
    throw std::invalid_argument("Dim: a quDit needs at least 2 levels, got " +
                                std::to_string(value));
  }
}

BasisLabel::BasisLabel(int value, Dim dim) : value_(value), dim_(dim) {
  if (value < 0 || value >= dim.value()) {
    throw std::invalid_argument("BasisLabel: value " + std::to_string(value) +
                                " out of range [0, " +
                                std::to_string(dim.value()) + ")");
  }
}

BasisLabel mod_add(BasisLabel s, BasisLabel k) {
  if (s.dim() != k.dim()) {
    throw std::invalid_argument("mod_add: dimension mismatch");
  }
  const int d = s.dim().value();
  return BasisLabel((s.value() + k.value()) % d, s.dim());
}

BasisLabel mod_sub(BasisLabel s, BasisLabel k) {
  if (s.dim() != k.dim()) {
    throw std::invalid_argument("mod_sub: dimension mismatch");
  }
  const int d = s.dim().value();
  return BasisLabel(((s.value() - k.value()) % d + d) % d, s.dim());
}

RegisterLayout::RegisterLayout(std::vector<Register> registers)
    : registers_(std::move(registers)) {
  if (registers_.empty()) {
    throw std::invalid_argument("RegisterLayout: no registers");
  }
  strides_.assign(registers_.size(), 1);
  total_dim_ = 1;
  for (std::size_t i = registers_.size(); i-- > 0;) {
    strides_[i] = total_dim_;
    total_dim_ *= static_cast<std::size_t>(registers_[i].dim.value());
  }
}

const Register& RegisterLayout::at(std::size_t i) const {
  if (i >= registers_.size()) {
    throw std::invalid_argument("RegisterLayout: register index " +
                                std::to_string(i) + " out of range");
  }
  return registers_[i];
}

std::size_t RegisterLayout::stride(std::size_t i) const {
  at(i);
  return strides_[i];
}

std::size_t RegisterLayout::encode(std::span<const int> labels) const {
  if (labels.size() != registers_.size()) {
    throw std::invalid_argument("RegisterLayout: expected " +
                                std::to_string(registers_.size()) +
                                " labels, got " + std::to_string(labels.size()));
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int d = registers_[i].dim.value();
    if (labels[i] < 0 || labels[i] >= d) {
      throw std::invalid_argument("RegisterLayout: label " +
                                  std::to_string(labels[i]) +
                                  " out of range for register " +
                                  std::to_string(i));
    }
    index += static_cast<std::size_t>(labels[i]) * strides_[i];
  }
  return index;
}

std::vector<int> RegisterLayout::decode(std::size_t index) const {
  std::vector<int> labels(registers_.size());
  decode(index, labels);
  return labels;
}

void RegisterLayout::decode(std::size_t index, std::span<int> labels_out) const {
  if (index >= total_dim_) {
    throw std::invalid_argument("RegisterLayout: index out of range");
  }
  if (labels_out.size() != registers_.size()) {
    throw std::invalid_argument("RegisterLayout: decode buffer size mismatch");
  }
  for (std::size_t i = 0; i < registers_.size(); ++i) {
    labels_out[i] = static_cast<int>(index / strides_[i]);
    index %= strides_[i];
  }
}

bool RegisterLayout::operator==(const RegisterLayout& other) const {
  return registers_ == other.registers_;
}

std::string register_name(const RegisterLayout& layout, std::size_t i) {
  const Register& r = layout.at(i);
  std::string name = r.role == RegisterRole::System ? "system" : "port";
  switch (r.owner) {
    case Party::Alice:
      return name + "_A";
    case Party::Bob:
      return name + "_B";
    case Party::Charlie:
      return name + "_C";
    case Party::None:
      return name + "[" + std::to_string(i) + "]";
  }
  return name;
}

StateVector::StateVector(RegisterLayout layout, Eigen::VectorXcd amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != layout_.total_dim()) {
    throw std::invalid_argument(
        "StateVector: amplitude count " + std::to_string(amplitudes_.size()) +
        " does not match layout dimension " +
        std::to_string(layout_.total_dim()));
  }
}

StateVector StateVector::zero(RegisterLayout layout) {
  const auto n = static_cast<Eigen::Index>(layout.total_dim());
  return StateVector(std::move(layout), Eigen::VectorXcd::Zero(n));
}

Complex StateVector::amplitude(std::span<const int> labels) const {
  return amplitudes_(static_cast<Eigen::Index>(layout_.encode(labels)));
}

double StateVector::norm() const { return amplitudes_.norm(); }

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) {
    throw std::invalid_argument("StateVector: cannot normalize a zero vector");
  }
  return StateVector(layout_, amplitudes_ / n);
}

StateVector basis_state(std::span<const BasisLabel> labels,
                        const RegisterLayout& layout) {
  if (labels.size() != layout.register_count()) {
    throw std::invalid_argument("basis_state: label count mismatch");
  }
  std::vector<int> values(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].dim() != layout.at(i).dim) {
      throw std::invalid_argument("basis_state: label dimension mismatch at " +
                                  std::to_string(i));
    }
    values[i] = labels[i].value();
  }
  return basis_state(std::span<const int>(values), layout);
}

StateVector basis_state(std::span<const int> labels,
                        const RegisterLayout& layout) {
  Eigen::VectorXcd amps =
      Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(layout.total_dim()));
  amps(static_cast<Eigen::Index>(layout.encode(labels))) = Complex(1.0, 0.0);
  return StateVector(layout, std::move(amps));
}

StateVector basis_state(std::initializer_list<int> labels,
                        const RegisterLayout& layout) {
  return basis_state(std::span<const int>(labels.begin(), labels.size()),
                     layout);
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  std::vector<Register> regs = a.layout().registers();
  regs.insert(regs.end(), b.layout().registers().begin(),
              b.layout().registers().end());
  const Eigen::Index na = a.amplitudes().size();
  const Eigen::Index nb = b.amplitudes().size();
  Eigen::VectorXcd amps(na * nb);
  for (Eigen::Index i = 0; i < na; ++i) {
    amps.segment(i * nb, nb) = a.amplitudes()(i) * b.amplitudes();
  }
  return StateVector(RegisterLayout(std::move(regs)), std::move(amps));
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (!(a.layout() == b.layout())) {
    throw std::invalid_argument("inner_product: layout mismatch");
  }
  return a.amplitudes().dot(b.amplitudes());
}

}  // namespace qsorter
