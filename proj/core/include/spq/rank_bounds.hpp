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

// Upper bounds for p-ranks of Lie-type groups read off the cyclotomic
// multiplicities of their order polynomials, and the sporadic rank filter.

#include <cstdint>

#include "spq/exact_arith.hpp"
#include "spq/group_id.hpp"
#include "spq/sporadic_table.hpp"

namespace spq {

/// Least m >= 1 with q^m = 1 (mod p). Throws NotCoprime when p divides q.
std::uint64_t multiplicative_order(const BigInt& q, std::uint64_t p);

struct PRankBound {
  GroupId group;
  std::uint64_t p;
  std::uint64_t m0;
  std::uint64_t bound;
  /// d whose multiplicity was read; differs from m0 only for Suzuki-Ree
  /// groups, where the exponent map is taken in s = sqrt(q).
  std::uint64_t cyclotomic_index;
};

/// Bound on the p-rank of an adjoint Lie-type group: the exponent of
/// Phi_{m0} in the universal order polynomial (same order as the simply
/// connected cover). For 2B2, 2G2, 2F4 the polynomial in s = sqrt(q) is used,
/// with m0 taken for s^2 = q, so both d = m0 (m0 odd) and d = 2 m0 are
/// possible orders of s; the larger multiplicity is returned.
/// Throws InvalidPrime for p = 2, non-prime p, or p dividing q.
PRankBound p_rank_upper_bound(const GroupId& g, std::uint64_t p);

/// True when the rank filter alone disposes of the sporadic group, i.e. it
/// carries no g(K) row in the table.
bool sporadic_rank_excluded(const SporadicRecord& k);

/// Largest multiplicity of any Phi_d in a single factor of the stored order
/// shape. The p-rank argument needs this to be 1.
std::uint64_t max_factor_multiplicity(LieFamily family, unsigned rank);

}  // namespace spq
