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

#include "qsorter/verify.hpp"

#include <iomanip>
#include <ostream>
#include <set>
#include <stdexcept>

namespace qsorter {

namespace {

constexpr double EXACT_TOL = 1e-12;

bool check_unitarity(Dim d) {
  const Unitary x = pauli_x(d);
  const Unitary xd = adjoint(x);
  // Construction already enforces the tolerance; re-verify through the
  // public predicate so a corrupted build cannot slip past.
  for (const Unitary* u : {&x, &xd}) {
    if (!is_unitary(LinearMap(u->matrix()), UNITARY_TOL)) {
      return false;
    }
  }
  for (const Unitary& u :
       {controlled(x, d), controlled_rev(xd, d), swap_gate(d), sqs(d)}) {
    if (!is_unitary(LinearMap(u.matrix()), UNITARY_TOL)) {
      return false;
    }
  }
  return true;
}

bool entrywise_equal(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return false;
  }
  return (a - b).cwiseAbs().maxCoeff() <= EXACT_TOL;
}

bool check_factorization(Dim d, const Unitary& sorter) {
  const Unitary x = pauli_x(d);
  const Eigen::MatrixXcd product =
      controlled(x, d).matrix() * controlled_rev(adjoint(x), d).matrix();
  return entrywise_equal(sorter.matrix(), product);
}

bool check_sqs_reduction(Dim d, const Unitary& sorter) {
  const int n = d.value();
  const Eigen::MatrixXcd single = sqs(d).matrix();
  Eigen::MatrixXcd shift = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd x_dag = adjoint(pauli_x(d)).matrix();
  for (int k = 0; k < n; ++k) {
    for (int s = 0; s < n; ++s) {
      // Column of |s>|k>: shift the system by (X†)^k, then sort from port 0.
      Eigen::VectorXcd vec = Eigen::VectorXcd::Zero(n * n);
      for (int s_mid = 0; s_mid < n; ++s_mid) {
        vec(s_mid * n + k) = shift(s_mid, s);
      }
      vec = single * vec;
      const Eigen::VectorXcd direct =
          sorter.matrix().col(s * n + k);
      if ((vec - direct).cwiseAbs().maxCoeff() > EXACT_TOL) {
        return false;
      }
    }
    shift = shift * x_dag;
  }
  return true;
}

bool check_k0_agreement(Dim d, const Unitary& sorter) {
  const int n = d.value();
  const Eigen::MatrixXcd single = sqs(d).matrix();
  for (int s = 0; s < n; ++s) {
    const int in = s * n + 0;
    const int out = s * n + s;
    Eigen::VectorXcd expected = Eigen::VectorXcd::Zero(n * n);
    expected(out) = 1.0;
    if ((single.col(in) - expected).cwiseAbs().maxCoeff() > EXACT_TOL ||
        (sorter.matrix().col(in) - expected).cwiseAbs().maxCoeff() >
            EXACT_TOL) {
      return false;
    }
  }
  return true;
}

bool check_perfect_sorter(Dim d) {
  const LinearMap map = perfect_sorter_map(d);
  if (is_unitary(map, 1e-6)) {
    return false;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(map.matrix());
  return qr.rank() == d.value();
}

}  // namespace

bool VerifyReport::all_pass() const {
  for (const CheckResult& c : checks) {
    if (!c.pass) {
      return false;
    }
  }
  return true;
}

const CheckResult* VerifyReport::first_failure() const {
  for (const CheckResult& c : checks) {
    if (!c.pass) {
      return &c;
    }
  }
  return nullptr;
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.max_dim < 2) {
    throw std::invalid_argument("verify: max_dim must be at least 2");
  }
  const auto build_mqs =
      options.mqs_builder ? options.mqs_builder : [](Dim d) { return mqs(d); };

  VerifyReport report;
  for (int n = 2; n <= options.max_dim; ++n) {
    const Dim d(n);
    const Unitary sorter = build_mqs(d);
    const bool sorter_unitary =
        is_unitary(LinearMap(sorter.matrix()), UNITARY_TOL);
    report.checks.push_back(
        {"unitarity", n, check_unitarity(d) && sorter_unitary});
    report.checks.push_back({"factorization", n, check_factorization(d, sorter)});
    report.checks.push_back(
        {"sqs-reduction", n, check_sqs_reduction(d, sorter)});
    report.checks.push_back(
        {"k0-agreement", n, check_k0_agreement(d, sorter)});
    report.checks.push_back({"perfect-sorter", n, check_perfect_sorter(d)});
  }
  return report;
}

void write_matrix(std::ostream& os, const VerifyReport& report) {
  std::set<int> dims;
  std::vector<std::string> names;
  for (const CheckResult& c : report.checks) {
    dims.insert(c.dim);
    bool seen = false;
    for (const std::string& n : names) {
      if (n == c.name) {
        seen = true;
        break;
      }
    }
    if (!seen) {
      names.push_back(c.name);
    }
  }

  // One row per dimension, one column per check.
  os << std::left << std::setw(6) << "";
  for (const std::string& name : names) {
    os << std::setw(name.size() + 2) << name;
  }
  os << '\n';
  for (int d : dims) {
    os << std::left << std::setw(6) << ("D=" + std::to_string(d));
    for (const std::string& name : names) {
      const char* cell = "-";
      for (const CheckResult& c : report.checks) {
        if (c.name == name && c.dim == d) {
          cell = c.pass ? "ok" : "FAIL";
          break;
        }
      }
      os << std::setw(name.size() + 2) << cell;
    }
    os << '\n';
  }
}

}  // namespace qsorter
