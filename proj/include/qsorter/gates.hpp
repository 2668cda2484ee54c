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

#ifndef QSORTER_GATES_HPP
#define QSORTER_GATES_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qsorter/hilbert.hpp"

namespace qsorter {

/// Entrywise tolerance for the U†U = I check enforced on every Unitary.
inline constexpr double UNITARY_TOL = 1e-10;

/// Dense complex matrix with no structural guarantees. Holds maps that are
/// deliberately allowed to be non-unitary, such as the would-be perfect
/// sorter.
class LinearMap {
 public:
  explicit LinearMap(Eigen::MatrixXcd entries);
  Eigen::Index rows() const { return entries_.rows(); }
  Eigen::Index cols() const { return entries_.cols(); }
  const Eigen::MatrixXcd& matrix() const { return entries_; }

 private:
  Eigen::MatrixXcd entries_;
};

/// Dense square complex matrix verified unitary (tolerance UNITARY_TOL) at
/// construction.
class Unitary {
 public:
  Unitary(Eigen::MatrixXcd entries, std::string label);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return entries_; }
  const std::string& label() const { return label_; }

 private:
  Eigen::MatrixXcd entries_;
  std::string label_;
};

/// True iff max entrywise |M†M - I| <= tol. Throws on non-square input.
bool is_unitary(const LinearMap& m, double tol);
bool is_unitary(const Eigen::MatrixXcd& m, double tol);

/// Generalized Pauli shift X: |j> -> |j + 1 mod D>. A cyclic permutation
/// matrix of order D.
Unitary pauli_x(Dim d);

/// Conjugate transpose.
Unitary adjoint(const Unitary& u);

/// Controlled-U with the control on the first register:
/// |s>|k> -> |s> U^s|k>. Block-diagonal with blocks U^0 .. U^(c-1).
Unitary controlled(const Unitary& u, Dim control_dim);

/// Controlled-U with the control on the second register and the target on
/// the first: |s>|k> -> (U^k|s>)|k>.
Unitary controlled_rev(const Unitary& u, Dim control_dim);

/// SWAP on two D-level registers: |s>|n> -> |n>|s>.
Unitary swap_gate(Dim d);

/// Single-input-port quantum sorter, the controlled shift C(X):
/// |s>|k> -> |s>|s + k mod D>. Sorts correctly only from port |0>.
Unitary sqs(Dim d);

/// Multi-input-port quantum sorter: |s>|k> -> |s - k mod D>|s>. Routes the
/// particle to output port |s> from any input port, at the price of shifting
/// the system state. Built directly from the permutation action; the
/// factorization into controlled gates is checked against it by the
/// verification suite rather than assumed.
Unitary mqs(Dim d);

/// The would-be perfect sorter |s>|k> -> |s>|s>: keeps the system state and
/// still routes to port |s>. Returned as a LinearMap because it is rank D
/// and therefore not unitary; no such device exists.
LinearMap perfect_sorter_map(Dim d);

/// A gate bound to an ordered subset of a layout's registers. The product of
/// the target register dimensions must equal the gate dimension.
struct GateApplication {
  Unitary gate;
  std::vector<std::size_t> targets;
};

/// Applies the gate to the target registers (identity on the rest, in any
/// register order). Works by mixed-radix index arithmetic on the flat
/// amplitude array; cost O(total_dim * gate_dim).
StateVector apply(const GateApplication& app, const StateVector& state);
StateVector apply(const Unitary& gate, std::vector<std::size_t> targets,
                  const StateVector& state);

}  // namespace qsorter

#endif  // QSORTER_GATES_HPP
