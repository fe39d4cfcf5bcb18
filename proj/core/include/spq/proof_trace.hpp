// Copyright 2026 The spq Authors
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

#include <string>
#include <vector>

namespace spq {

/// One exact comparison. lhs/rhs are decimal strings; `relation` is the
/// claimed relation between them (">", ">=", "=").
struct ProofStep {
  std::string label;
  std::string relation;
  std::string lhs;
  std::string rhs;
  bool ok = false;
  std::string note;
  /// Recorded for reference only; does not affect ProofTrace::ok().
  bool informational = false;
};

struct ProofTrace {
  std::string title;
  std::vector<ProofStep> steps;

  bool ok() const {
    for (const auto& s : steps) {
      if (!s.informational && !s.ok) return false;
    }
    return true;
  }
  /// Index of the first failing non-informational step, or steps.size().
  std::size_t first_failure() const {
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (!steps[i].informational && !steps[i].ok) return i;
    }
    return steps.size();
  }
};

}  // namespace spq
