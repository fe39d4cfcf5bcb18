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

// Natural module dimensions and the few permutation degrees the exclusion
// argument needs.

#include <optional>

#include "spq/exact_arith.hpp"
#include "spq/group_id.hpp"

namespace spq {

/// Dimension of the natural projective module: A_n, 2A_n -> n+1; B_n -> 2n+1;
/// C_n, D_n, 2D_n -> 2n. Throws NotClassical otherwise.
unsigned natural_proj_dim(const GroupId& g);

/// 2^{g-1}(2^g - 1), the smallest index of a proper subgroup of the mapping
/// class group in genus g. Throws GenusTooSmall for g < 3.
BigInt mcg_min_index(unsigned g);

/// Minimal faithful permutation degree, known here only for C_g(2), D_g(2)
/// and 2D_g(2) at the given genus; nullopt for anything else.
std::optional<BigInt> min_perm_degree(const GroupId& k, unsigned genus);

}  // namespace spq
