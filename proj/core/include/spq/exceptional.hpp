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

// Exact order comparisons placing the smallest member of each exceptional
// family above the relevant symplectic group.

#include "spq/proof_trace.hpp"

namespace spq {

/// Steps, in order:
///   |2G2(27)| > |G2(3)| > |Sp_6(2)|
///   |F4(2)|  > |Sp_8(2)|
///   |E6(2)|  > |2E6(2)| > |Sp_12(2)|
///   |E7(2)|  > |Sp_14(2)|
///   |E8(2)|  > |Sp_16(2)|
/// with adjoint orders throughout, then |3D4(2)| and |2F4(2)| against
/// |Sp_6(2)| and the universal order of 2E6(2) for reference (informational).
ProofTrace verify_exceptional_inequalities();

/// Throws InequalityFailed naming the first failing comparison.
ProofTrace require_exceptional_inequalities();

}  // namespace spq
