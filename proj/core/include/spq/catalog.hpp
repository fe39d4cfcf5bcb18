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

// Orders, simplicity and normal forms for the groups named by GroupId.

#include <cstdint>
#include <vector>

#include "spq/exact_arith.hpp"
#include "spq/group_id.hpp"

namespace spq {

/// Universal order of a Lie-type group as q^qPower times a list of factors,
/// each of the form x^n - w (w = +1 or -1) or, for 3D4, x^8 + x^4 + 1.
/// Suzuki and Ree families are written in the actual q.
struct OrderShape {
  std::uint64_t q_power = 0;
  std::vector<IntPoly> factors;

  /// Cyclotomic exponent map of the whole product.
  CycloFactorization factorization() const;
  BigInt evaluate(const BigInt& q) const;
};

OrderShape universal_shape(LieFamily family, unsigned rank);

/// The same order written in s = sqrt(q) for 2B2, 2G2, 2F4 (q = s^2, with s
/// irrational for odd powers; only the exponent map is used).
OrderShape suzuki_ree_sqrt_shape(LieFamily family);

/// |universal| / |adjoint|.
BigInt center_divisor(LieFamily family, unsigned rank, std::uint64_t q);
/// Largest value center_divisor can take for the given family and rank.
unsigned max_center_divisor(LieFamily family, unsigned rank);

BigInt universal_order(LieFamily family, unsigned rank, std::uint64_t q);
BigInt order(const GroupId& g);

bool is_simple(const GroupId& g);

/// Folds the exceptional isomorphisms so that isomorphic simple groups get the
/// same representative: Alt_5, Alt_6, Alt_8 over their Lie aliases, A_1(7) for
/// A_2(2), C_2(3) for 2A_3(2), C over B in rank 2 and in even characteristic,
/// and A_3 / 2A_3 over D_3 / 2D_3. Universal versions are returned unchanged.
GroupId canonicalize(const GroupId& g);

/// 2^{g^2} prod_{i=1}^{g} (2^{2i} - 1), computed without the shape tables.
BigInt sp_order(unsigned g);

/// Least g with order(k) < sp_order(g).
unsigned g_of(const GroupId& k);
unsigned g_of_order(const BigInt& order);

}  // namespace spq
