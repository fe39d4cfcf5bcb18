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

#include <optional>
#include <random>

#include "naive_matrix.hpp"
#include "spq/errors.hpp"
#include "spq/flag_oracle.hpp"

using namespace spq;

namespace {

oracle::IMat to_imat(const FFMatrix& m) {
  oracle::IMat out(m.n(), std::vector<int>(m.n()));
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = 0; j < m.n(); ++j) out[i][j] = static_cast<int>(m.at(i, j));
  return out;
}

std::vector<int> to_ints(const FFPoly& p) { return {p.c.begin(), p.c.end()}; }

bool preserves(const FFMatrix& y, const Subspace& u) { return u.image(y) == u; }

}  // namespace

TEST(CharPoly, SmallExamples) {
  const auto f2 = FiniteField::get(2, 1);
  // t^2 - 2t + 1 = t^2 + 1 over GF(2)
  EXPECT_EQ(char_poly(FFMatrix::identity(f2, 2)), (FFPoly{f2, {1, 0, 1}}));

  const auto f5 = FiniteField::get(5, 1);
  const FFPoly p{f5, {3, 4, 0, 1}};
  EXPECT_EQ(char_poly(FFMatrix::companion(p)), p);
}

TEST(CharPoly, AgreesWithCofactorExpansion) {
  std::mt19937 rng(7);
  for (auto [p, n] : {std::pair{3u, 3u}, std::pair{3u, 4u}, std::pair{5u, 4u}, std::pair{2u, 5u}}) {
    const auto f = FiniteField::get(p, 1);
    const auto F = oracle::prime_field(static_cast<int>(p));
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<FiniteField::Elem> e(n * n);
      for (auto& v : e) v = rng() % p;
      const FFMatrix x(f, n, e);
      ASSERT_EQ(to_ints(char_poly(x)), oracle::char_poly(F, to_imat(x))) << x.to_string();
    }
  }
}

TEST(CharPoly, AgreesOverGf4) {
  const auto f = FiniteField::get(2, 2);
  const auto F = oracle::gf4();
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const FFMatrix x = FFMatrix::from_index(f, 3, rng() % (1u << 18));
    ASSERT_EQ(to_ints(char_poly(x)), oracle::char_poly(F, to_imat(x))) << x.to_string();
  }
}

TEST(EigenData, JordanBlockOverGf5) {
  const auto f = FiniteField::get(5, 1);
  // J_2(2) + [3]
  const FFMatrix x(f, 3, {2, 1, 0, 0, 2, 0, 0, 0, 3});
  const auto d = eigen_data(x);
  EXPECT_EQ(d.splitting->size(), 5u);
  ASSERT_EQ(d.eigenvalues.size(), 2u);
  EXPECT_EQ(d.eigenvalues[0].value, 2u);
  EXPECT_EQ(d.eigenvalues[0].algebraic_multiplicity, 2u);
  EXPECT_EQ(d.eigenvalues[0].kernel_dims, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(d.eigenvalues[1].value, 3u);
  EXPECT_EQ(d.eigenvalues[1].eigenspace_dim, 1u);
}

TEST(EigenData, NeedsAnExtension) {
  // Companion of t^2 + t + 1 over GF(2) splits over GF(4).
  const auto f = FiniteField::get(2, 1);
  const auto d = eigen_data(FFMatrix::companion(FFPoly{f, {1, 1, 1}}));
  EXPECT_EQ(d.splitting->size(), 4u);
  ASSERT_EQ(d.eigenvalues.size(), 2u);
  EXPECT_EQ(d.eigenvalues[0].eigenspace_dim, 1u);
}

TEST(EigenData, EigenspacesMatchBruteForce) {
  const auto f = FiniteField::get(3, 1);
  const auto F = oracle::prime_field(3);
  for (std::uint64_t code = 0; code < 19683; code += 37) {
    const FFMatrix x = FFMatrix::from_index(f, 3, code);
    const auto d = eigen_data(x);
    if (d.splitting->size() != 3) continue;
    for (const auto& ev : d.eigenvalues) {
      const FFMatrix shifted = x - FFMatrix::scalar(f, 3, ev.value);
      ASSERT_EQ(ev.eigenspace_dim, oracle::kernel_dim(F, to_imat(shifted))) << x.to_string();
    }
  }
}

TEST(InvariantFlag, DistinctEigenvalues) {
  const auto f = FiniteField::get(7, 1);
  const auto r = invariant_flag(FFMatrix::diagonal(f, {1, 2, 3}));
  EXPECT_EQ(r.kind, FlagCase::ThreeOrMore);
  EXPECT_EQ(r.flag.u.dim(), 1u);
  EXPECT_EQ(r.flag.u_prime.dim(), 2u);
  EXPECT_TRUE(flag_dimensions_ok(r.flag));
}

TEST(InvariantFlag, SingleJordanBlock) {
  const auto f = FiniteField::get(5, 1);
  const auto r = invariant_flag(FFMatrix(f, 3, {4, 1, 0, 0, 4, 1, 0, 0, 4}));
  EXPECT_EQ(r.kind, FlagCase::OneRootCyclic);
  EXPECT_EQ(r.flag.u.dim(), 1u);
  EXPECT_EQ(r.flag.u_prime.dim(), 2u);
}

TEST(InvariantFlag, Preconditions) {
  const auto f = FiniteField::get(3, 1);
  EXPECT_THROW(invariant_flag(FFMatrix::identity(f, 2)), PreconditionViolated);
  EXPECT_THROW(invariant_flag(FFMatrix(f, 3)), PreconditionViolated);
  // eigenspace of dimension n - 1
  EXPECT_THROW(invariant_flag(FFMatrix::diagonal(f, {1, 1, 2})), PreconditionViolated);
}

TEST(Centralizer, SmallExamples) {
  const auto f2 = FiniteField::get(2, 1);
  EXPECT_EQ(centralizer(FFMatrix::identity(f2, 2)).size(), 6u);
  EXPECT_EQ(centralizer(FFMatrix::companion(FFPoly{f2, {1, 1, 1}})).size(), 3u);

  const auto f4 = FiniteField::get(2, 2);
  EXPECT_EQ(centralizer(FFMatrix::diagonal(f4, {1, 2})).size(), 9u);

  EXPECT_THROW(centralizer(FFMatrix::identity(FiniteField::get(3, 1), 4), 1000), TooLarge);
}

TEST(Centralizer, MatchesEnumeration) {
  const auto f = FiniteField::get(2, 1);
  const auto F = oracle::prime_field(2);
  for (std::uint64_t code = 0; code < 512; code += 5) {
    const FFMatrix x = FFMatrix::from_index(f, 3, code);
    auto got = centralizer(x);
    const auto want = oracle::centralizer(F, to_imat(x));
    ASSERT_EQ(got.size(), want.size()) << x.to_string();
    for (const auto& y : got) ASSERT_EQ(x * y, y * x);
  }
}

TEST(Subspace, CanonicalEquality) {
  const auto f = FiniteField::get(3, 1);
  const Subspace a(f, 3, {{1, 1, 0}, {0, 1, 1}});
  const Subspace b(f, 3, {{1, 2, 1}, {2, 2, 0}});
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.contains(Subspace(f, 3, {{1, 0, 2}})));
  EXPECT_FALSE(a.contains(Subspace(f, 3, {{1, 0, 0}})));
}

TEST(FlagScan, Gl3Of2) {
  const auto r = flag_scan(3, 2);
  EXPECT_EQ(r.scanned, 168u);
  EXPECT_TRUE(r.ok());
  std::uint64_t total = 0;
  for (auto c : r.by_case) total += c;
  EXPECT_EQ(total, r.eligible);
  EXPECT_GT(r.eligible, 0u);
}

TEST(FlagScan, FlagsAreCentralizerStable) {
  // Spot check independent of flag_scan's own loop.
  const auto f = FiniteField::get(3, 1);
  for (std::uint64_t code = 1; code < 19683; code += 101) {
    const FFMatrix x = FFMatrix::from_index(f, 3, code);
    if (!x.invertible()) continue;
    std::optional<FlagResult> r;
    try {
      r = invariant_flag(x);
    } catch (const PreconditionViolated&) {
      continue;
    }
    const auto& e = r->data.embedding;
    for (const auto& y : centralizer(x)) {
      const FFMatrix ye = y.embed(e);
      ASSERT_TRUE(preserves(ye, r->flag.u)) << x.to_string();
      ASSERT_TRUE(preserves(ye, r->flag.u_prime)) << x.to_string();
    }
  }
}

TEST(FlagScan, Ranges) {
  EXPECT_THROW(flag_scan(2, 2), RangeError);
  EXPECT_THROW(flag_scan(3, 6), InvalidParameters);
  EXPECT_THROW(flag_scan(4, 3), RangeError);
  EXPECT_EQ(split_prime_power(9), (std::pair<std::uint32_t, unsigned>{3, 2}));
  EXPECT_THROW(split_prime_power(12), InvalidParameters);
}
