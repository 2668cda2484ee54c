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

#ifndef QSORTER_HILBERT_HPP
#define QSORTER_HILBERT_HPP

#include <complex>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qsorter {

using Complex = std::complex<double>;

/// Normalization tolerance for state vectors and probability sums.
inline constexpr double NORM_TOL = 1e-10;

/// Number of levels of a quDit. A 1-level "system" admits no sorting and is
/// rejected at construction.
class Dim {
 public:
  explicit Dim(int value);
  int value() const { return value_; }
  bool operator==(const Dim&) const = default;

 private:
  int value_;
};

/// A computational-basis label in [0, D).
class BasisLabel {
 public:
  BasisLabel(int value, Dim dim);
  int value() const { return value_; }
  Dim dim() const { return dim_; }
  bool operator==(const BasisLabel&) const = default;

 private:
  int value_;
  Dim dim_;
};

/// Addition modulo D on basis labels. Both labels must share the dimension.
BasisLabel mod_add(BasisLabel s, BasisLabel k);

/// Subtraction modulo D on basis labels; the result is always in [0, D).
BasisLabel mod_sub(BasisLabel s, BasisLabel k);

enum class RegisterRole { System, Port };
enum class Party { None, Alice, Bob, Charlie };

struct Register {
  RegisterRole role;
  Dim dim;
  Party owner = Party::None;
  bool operator==(const Register&) const = default;
};

/// Ordered list of registers defining the mixed-radix index space of a
/// composite Hilbert space. The first register is the most significant
/// mixed-radix digit, so kets written left to right map onto indices
/// high to low.
class RegisterLayout {
 public:
  explicit RegisterLayout(std::vector<Register> registers);

  std::size_t register_count() const { return registers_.size(); }
  const Register& at(std::size_t i) const;
  const std::vector<Register>& registers() const { return registers_; }
  std::size_t total_dim() const { return total_dim_; }

  /// Index step of register i: increasing its label by one moves the flat
  /// index by stride(i).
  std::size_t stride(std::size_t i) const;

  /// Flat index of a per-register label tuple.
  std::size_t encode(std::span<const int> labels) const;

  /// Per-register labels of a flat index.
  std::vector<int> decode(std::size_t index) const;
  void decode(std::size_t index, std::span<int> labels_out) const;

  bool operator==(const RegisterLayout&) const;

 private:
  std::vector<Register> registers_;
  std::vector<std::size_t> strides_;
  std::size_t total_dim_;
};

/// Printable register name for reports, e.g. "system_A" or "port_B".
std::string register_name(const RegisterLayout& layout, std::size_t i);

/// Complex amplitude array over a RegisterLayout. Values are immutable after
/// construction; all operations on them are pure functions.
class StateVector {
 public:
  StateVector(RegisterLayout layout, Eigen::VectorXcd amplitudes);

  static StateVector zero(RegisterLayout layout);

  const RegisterLayout& layout() const { return layout_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Complex amplitude(std::span<const int> labels) const;

  double norm() const;
  StateVector normalized() const;

 private:
  RegisterLayout layout_;
  Eigen::VectorXcd amplitudes_;
};

/// The basis ket with the given per-register labels: one amplitude 1, rest 0.
StateVector basis_state(std::span<const BasisLabel> labels,
                        const RegisterLayout& layout);
StateVector basis_state(std::span<const int> labels,
                        const RegisterLayout& layout);
StateVector basis_state(std::initializer_list<int> labels,
                        const RegisterLayout& layout);

/// Tensor product; the result layout is the concatenation a.layout ++ b.layout.
StateVector tensor(const StateVector& a, const StateVector& b);

/// <a|b>, conjugate-linear in the first argument. Layouts must be identical.
Complex inner_product(const StateVector& a, const StateVector& b);

}  // namespace qsorter

#endif  // QSORTER_HILBERT_HPP
