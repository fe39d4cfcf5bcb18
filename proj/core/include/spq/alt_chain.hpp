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

// Exact check that the alternating group on 2^{g-1}(2^g - 1) letters is
// larger than Sp_2g(2).

#include "spq/proof_trace.hpp"

namespace spq {

struct AltChainOptions {
  /// Also compare n!/2 with 2 |Sp_2g(2)| using the full factorial. The
  /// factorial has n = 2^{g-1}(2^g - 1) terms, so keep this to g <= 8 or so.
  bool exact_factorial = false;
};

/// Runs every step for genus g >= 3. Steps:
///   n!/2 >= (n/4)^n                      (factorial bound, by descent n -> n/4)
///   (n/4)^n > (n/4)^{9g}                 (n > 9g, n/4 >= 2)
///   (n/4)^{9g} = 2^{9g(g-3)} (2^g-1)^{9g}
///   2^{9g(g-3)} (2^g-1)^{9g} > |Sp_2g(2)|
/// plus, when requested, the direct factorial comparison. The printed variant
/// with 2^{9g^2-27} is recorded as an informational step.
ProofTrace verify_alt_chain(unsigned g, AltChainOptions options = {});

/// Same trace; throws ChainStepFailed with the index of the first failing step.
ProofTrace require_alt_chain(unsigned g, AltChainOptions options = {});

}  // namespace spq
