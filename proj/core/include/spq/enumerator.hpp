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

// Enumeration of the non-abelian finite simple groups up to an order bound.

#include <cstdint>
#include <string>
#include <vector>

#include "spq/exact_arith.hpp"
#include "spq/group_id.hpp"

namespace spq {

struct EnumeratedGroup {
  GroupId group;
  BigInt order;
};

/// Which prime powers a Lie family admits.
enum class FieldClass { AnyPrimePower, OddPrimePower };

/// All groups family_rank(q) with q a prime power of the given class in
/// [q_lo, q_hi] and adjoint order <= the bound. Listed instead of
/// enumerated when q_lo exceeds the explicit limit; every such group has the
/// same family and rank, which is all the exclusion rules look at.
struct LieSeries {
  LieFamily family;
  unsigned rank;
  BigInt q_lo;
  BigInt q_hi;
  FieldClass field;

  std::string name() const;
};

struct EnumerationResult {
  BigInt bound;
  std::uint64_t explicit_q_limit;
  std::vector<EnumeratedGroup> groups;  // sorted by (order, name)
  std::vector<LieSeries> series;

  bool fully_explicit() const { return series.empty(); }
};

inline constexpr std::uint64_t kDefaultExplicitQLimit = 1u << 16;

/// Everything non-abelian simple of order <= bound, canonicalised and
/// deduplicated. Lie families are walked rank by rank and q by q; the walk
/// stops once |universal| exceeds bound * (largest centre), after checking
/// that |universal| really grows in q and in rank. Prime powers above
/// explicit_q_limit are reported as LieSeries blocks.
EnumerationResult enumerate_simple_below(const BigInt& bound,
                                         std::uint64_t explicit_q_limit = kDefaultExplicitQLimit);

/// Prime powers 2 <= q <= limit, ascending.
std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit);

}  // namespace spq
