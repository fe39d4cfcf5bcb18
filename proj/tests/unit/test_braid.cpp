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

#include <random>

#include "spq/braid_checks.hpp"
#include "spq/errors.hpp"

using namespace spq;

TEST(Braid, Basics) {
  const auto f = FiniteField::get(5, 1);
  const FFMatrix p(f, 2, {1, 1, 0, 1});
  const FFMatrix q(f, 2, {1, 0, 4, 1});  // [[1,0],[-1,1]]: the SL2 braid pair
  EXPECT_TRUE(braid_check(p, p));
  EXPECT_TRUE(braid_check(p, q));
  EXPECT_FALSE(braid_check(p, FFMatrix::diagonal(f, {2, 1})));
  EXPECT_THROW(braid_check(p, FFMatrix::identity(f, 3)), InvalidParameters);
}

TEST(Braid, ConjugationInvariant) {
  const auto f = FiniteField::get(7, 1);
  const FFMatrix p(f, 2, {1, 1, 0, 1});
  const FFMatrix q(f, 2, {1, 0, 6, 1});
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    FFMatrix y(f, 2);
    do {
      std::vector<FiniteField::Elem> e(4);
      for (auto& v : e) v = static_cast<FiniteField::Elem>(rng() % 7);
      y = FFMatrix(f, 2, e);
    } while (!y.invertible());
    const FFMatrix yi = y.inverse();
    EXPECT_TRUE(braid_check(y * p * yi, y * q * yi));
  }
}

TEST(TripleProduct, HoldsOverSmallFields) {
  for (auto [p, k] : {std::pair{7u, 1u}, std::pair{5u, 1u}, std::pair{2u, 2u}, std::pair{3u, 2u}}) {
    const auto rep = verify_triple_product(FiniteField::get(p, k));
    EXPECT_TRUE(rep.ok()) << rep.q;
    EXPECT_EQ(rep.pairs, std::size_t(rep.q - 1) * (rep.q - 1));
  }
  const auto rep = verify_triple_product(FiniteField::get(7, 1));
  EXPECT_EQ(rep.pairs, 36u);
  // diag(d/e, 1, e/d) = diag(e/d, 1, d/e) exactly when (d/e)^2 = 1: 2 * 6 pairs.
  EXPECT_EQ(rep.braid_pairs, 12u);
}

TEST(SwapCase, OddCharacteristic) {
  const auto rep = verify_swap_case(FiniteField::get(5, 1));
  ASSERT_EQ(rep.rows.size(), 2u);
  EXPECT_EQ(rep.rows[1].omega, 4u);
  EXPECT_TRUE(rep.ok());
  EXPECT_FALSE(rep.degenerate);
}

TEST(SwapCase, CharacteristicTwoIsDegenerate) {
  for (unsigned k : {1u, 2u, 3u}) {
    const auto rep = verify_swap_case(FiniteField::get(2, k));
    EXPECT_TRUE(rep.degenerate);
    ASSERT_EQ(rep.rows.size(), 1u);
    EXPECT_EQ(rep.rows[0].omega, 1u);
  }
}

namespace {

std::vector<FiniteField::Elem> braiding_mus(const GoldenScanReport& r) {
  std::vector<FiniteField::Elem> out;
  for (const auto& s : r.summary)
    if (s.unequal_braid_exists) out.push_back(s.mu);
  return out;
}

}  // namespace

// Unequal braid pairs of this shape exist exactly when mu^2 - mu + 1 = 0.
TEST(GoldenScan, CharacterisedByMuSquaredMinusMuPlusOne) {
  for (auto [p, k] : {std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{5u, 1u}, std::pair{7u, 1u},
                      std::pair{2u, 2u}, std::pair{2u, 3u}}) {
    const auto rep = golden_braid_scan(FiniteField::get(p, k));
    EXPECT_TRUE(rep.corrected_counterexamples().empty()) << rep.q;
  }
  EXPECT_EQ(braiding_mus(golden_braid_scan(FiniteField::get(3, 1))), (std::vector<FiniteField::Elem>{2}));
  EXPECT_EQ(braiding_mus(golden_braid_scan(FiniteField::get(5, 1))), (std::vector<FiniteField::Elem>{}));
  EXPECT_EQ(braiding_mus(golden_braid_scan(FiniteField::get(7, 1))), (std::vector<FiniteField::Elem>{3, 5}));
}

TEST(GoldenScan, MuSquaredMinusMuMinusOneHasCounterexamples) {
  // GF(5): mu = 3 is a root of mu^2 - mu - 1 but no pair braids.
  EXPECT_EQ(golden_braid_scan(FiniteField::get(5, 1)).stated_counterexamples(), (std::vector<FiniteField::Elem>{3}));
  EXPECT_EQ(golden_braid_scan(FiniteField::get(3, 1)).stated_counterexamples(), (std::vector<FiniteField::Elem>{2}));
  EXPECT_EQ(golden_braid_scan(FiniteField::get(7, 1)).stated_counterexamples().size(), 2u);
}

TEST(GoldenScan, Gf9) {
  const auto rep = golden_braid_scan(FiniteField::get(3, 2));
  EXPECT_TRUE(rep.corrected_counterexamples().empty());
  EXPECT_EQ(rep.stated_counterexamples().size(), 3u);
  EXPECT_EQ(braiding_mus(rep).size(), 1u);
  EXPECT_THROW(golden_braid_scan(FiniteField::get(11, 1)), RangeError);
}
