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

#ifndef QSORTER_VERIFY_HPP
#define QSORTER_VERIFY_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "qsorter/gates.hpp"

namespace qsorter {

/// Self-checks of the sorter constructions, run per dimension:
///   unitarity       - every gate builder output passes is_unitary
///   factorization   - MQS equals C(X) * C~(adj(X)) entrywise
///   sqs-reduction   - MQS equals SQS after the port-conditioned inverse
///                     shift, on every basis input
///   k0-agreement    - SQS and MQS agree on port input |0>: both |s>|s>
///   perfect-sorter  - the |s>|k> -> |s>|s> map has rank D and is not unitary
struct VerifyOptions {
  int max_dim = 8;
  /// Test hook: replaces the MQS builder under check. Leave empty for the
  /// real one.
  std::function<Unitary(Dim)> mqs_builder;
};

struct CheckResult {
  std::string name;
  int dim;
  bool pass;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  /// First failing check in run order, or nullptr.
  const CheckResult* first_failure() const;
};

VerifyReport run_verification(const VerifyOptions& options = {});

/// Pass/fail matrix, one row per check, one column per dimension.
void write_matrix(std::ostream& os, const VerifyReport& report);

}  // namespace qsorter

#endif  // QSORTER_VERIFY_HPP
