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

#include <gtest/gtest.h>

#include "spq/catalog.hpp"
#include "spq/errors.hpp"
#include "spq/rank_bounds.hpp"
#include "spq/sporadic_table.hpp"

using namespace spq;

TEST(MultiplicativeOrder, Examples) {
  EXPECT_EQ(multiplicative_order(2, 7), 3u);
  EXPECT_EQ(multiplicative_order(4, 3), 1u);
  EXPECT_EQ(multiplicative_order(2, 5), 4u);
  EXPECT_THROW(multiplicative_order(9, 3), NotCoprime);
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    for (long q : {2, 4, 8, 9, 25, 27}) {
      if (q % p == 0) continue;
      std::uint64_t m = 1;
      long r = q % p;
      while (r != 1) {
        r = r * q % p;
        ++m;
      }
      EXPECT_EQ(multiplicative_order(q, p), m);
    }
  }
}

TEST(PRankBound, Examples) {
  EXPECT_EQ(p_rank_upper_bound(GroupId::lie(LieFamily::A, 2, 4), 3).bound, 2u);
  for (unsigned g = 2; g <= 6; ++g) {
    const auto b = p_rank_upper_bound(GroupId::lie(LieFamily::C, g, 2), 3);
    EXPECT_EQ(b.m0, 2u);
    EXPECT_EQ(b.bound, g);
  }
  EXPECT_LE(p_rank_upper_bound(GroupId::lie(LieFamily::A, 1, 2), 5).bound, 1u);
}

TEST(PRankBound, Refusals) {
  EXPECT_THROW(p_rank_upper_bound(GroupId::lie(LieFamily::A, 2, 4), 2), InvalidPrime);
  EXPECT_THROW(p_rank_upper_bound(GroupId::lie(LieFamily::A, 2, 9), 3), InvalidPrime);
  EXPECT_THROW(p_rank_upper_bound(GroupId::lie(LieFamily::A, 2, 4), 9), InvalidPrime);
}

TEST(PRankBound, SuzukiReeUsesSquareRoot) {
  // |2B2(8)| = 2^6 * 5 * 7 * 13; 5 and 13 divide q^2 + 1 = 65 and the 5- and
  // 13-parts are cyclic, so the bound must be at least 1 and at most 2.
  for (std::uint64_t p : {5, 7, 13}) {
    const auto b = p_rank_upper_bound(GroupId::lie(LieFamily::B2_2, 8), p);
    EXPECT_GE(b.bound, 1u) << p;
    EXPECT_LE(b.bound, 2u) << p;
  }
  const auto b = p_rank_upper_bound(GroupId::lie(LieFamily::G2_2, 27), 7);
  EXPECT_GE(b.bound, 1u);
  EXPECT_LE(b.bound, 2u);
}

TEST(PRankBound, NeverExceedsRankOnGrid) {
  for (LieFamily f : kAllFamilies) {
    const unsigned hi = fixed_rank(f) ? *fixed_rank(f) : 8u;
    for (unsigned r = min_rank(f); r <= hi; ++r) {
      for (std::uint64_t q : {2, 3, 4, 5, 8, 9}) {
        GroupId g = GroupId::alternating(5);
        try {
          g = GroupId::lie(f, r, q);
        } catch (const InvalidParameters&) {
          continue;
        }
        for (std::uint64_t p : {3, 5, 7, 11, 13}) {
          if (q % p == 0) continue;
          EXPECT_LE(p_rank_upper_bound(g, p).bound, r) << g.name() << " p=" << p;
        }
      }
    }
  }
}

TEST(PRankBound, NoSquaredCyclotomicInAnyStoredFactor) {
  for (LieFamily f : kAllFamilies) {
    const unsigned hi = fixed_rank(f) ? *fixed_rank(f) : 12u;
    for (unsigned r = min_rank(f); r <= hi; ++r) EXPECT_EQ(max_factor_multiplicity(f, r), 1u) << r;
  }
}

TEST(SporadicRankFilter, Membership) {
  const auto& t = builtin_sporadic_table();
  EXPECT_TRUE(sporadic_rank_excluded(*t.find("M23")));
  EXPECT_FALSE(sporadic_rank_excluded(*t.find("McL")));
  EXPECT_FALSE(sporadic_rank_excluded(*t.find("M")));
}
