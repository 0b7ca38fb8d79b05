// Copyright 2026 The smqsl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace smqsl {

/// Outcome of one verification criterion.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the full oracle verification suite (closed forms against generic
/// pipelines, inequality sweeps, figure-region reproductions).
std::vector<CriterionResult> run_acceptance_criteria();

/// One line per criterion plus a summary; returns true when all passed.
bool print_criteria_table(const std::vector<CriterionResult>& results,
                          std::ostream& out);

}  // namespace smqsl
