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

#include "spq/catalog.hpp"

#include "spq/errors.hpp"
#include "spq/sporadic_table.hpp"

namespace spq {

namespace {

IntPoly x_minus(std::uint64_t n, int omega) { return IntPoly::binomial(n, omega); }

// (-1)^k as the sign w in x^n - w
int alt_sign(std::uint64_t k) { return k % 2 == 0 ? 1 : -1; }

OrderShape shape(std::uint64_t q_power, std::initializer_list<std::pair<std::uint64_t, int>> factors) {
  OrderShape s;
  s.q_power = q_power;
  for (auto [n, w] : factors) s.factors.push_back(x_minus(n, w));
  return s;
}

std::uint64_t gcd_u(std::uint64_t a, const BigInt& b) {
  BigInt g;
  BigInt aa(static_cast<unsigned long>(a));
  mpz_gcd(g.get_mpz_t(), aa.get_mpz_t(), b.get_mpz_t());
  return to_u64(g);
}

}  // namespace

CycloFactorization OrderShape::factorization() const {
  CycloFactorization out;
  out.q_power = q_power;
  for (const auto& f : factors) out *= factor_cyclotomic(f);
  return out;
}

BigInt OrderShape::evaluate(const BigInt& q) const {
  BigInt out = pow(q, q_power);
  for (const auto& f : factors) out *= f.evaluate(q);
  return out;
}

OrderShape universal_shape(LieFamily family, unsigned rank) {
  if (auto fixed = fixed_rank(family); fixed && rank != *fixed) {
    throw InvalidParameters(std::string(family_token(family)) + " has fixed rank " + std::to_string(*fixed));
  }
  if (rank < 1) throw InvalidParameters("rank must be positive");
  const std::uint64_t n = rank;
  OrderShape s;
  switch (family) {
    case LieFamily::A:
      s.q_power = n * (n + 1) / 2;
      for (std::uint64_t i = 1; i <= n; ++i) s.factors.push_back(x_minus(i + 1, 1));
      return s;
    case LieFamily::A2:
      s.q_power = n * (n + 1) / 2;
      for (std::uint64_t i = 1; i <= n; ++i) s.factors.push_back(x_minus(i + 1, alt_sign(i + 1)));
      return s;
    case LieFamily::B:
    case LieFamily::C:
      s.q_power = n * n;
      for (std::uint64_t i = 1; i <= n; ++i) s.factors.push_back(x_minus(2 * i, 1));
      return s;
    case LieFamily::D:
    case LieFamily::D2:
      s.q_power = n * (n - 1);
      s.factors.push_back(x_minus(n, family == LieFamily::D ? 1 : -1));
      for (std::uint64_t i = 1; i < n; ++i) s.factors.push_back(x_minus(2 * i, 1));
      return s;
    case LieFamily::D4_3:
      s.q_power = 12;
      s.factors.push_back(IntPoly{1, 0, 0, 0, 1, 0, 0, 0, 1});  // q^8 + q^4 + 1
      s.factors.push_back(x_minus(6, 1));
      s.factors.push_back(x_minus(2, 1));
      return s;
    case LieFamily::G2:
      return shape(6, {{6, 1}, {2, 1}});
    case LieFamily::G2_2:
      return shape(3, {{3, -1}, {1, 1}});
    case LieFamily::F4:
      return shape(24, {{12, 1}, {8, 1}, {6, 1}, {2, 1}});
    case LieFamily::F4_2:
      return shape(12, {{6, -1}, {4, 1}, {3, -1}, {1, 1}});
    case LieFamily::E6:
      return shape(36, {{12, 1}, {9, 1}, {8, 1}, {6, 1}, {5, 1}, {2, 1}});
    case LieFamily::E6_2:
      return shape(36, {{12, 1}, {9, -1}, {8, 1}, {6, 1}, {5, -1}, {2, 1}});
    case LieFamily::E7:
      return shape(63, {{18, 1}, {14, 1}, {12, 1}, {10, 1}, {8, 1}, {6, 1}, {2, 1}});
    case LieFamily::E8:
      return shape(120, {{30, 1}, {24, 1}, {20, 1}, {18, 1}, {14, 1}, {12, 1}, {8, 1}, {2, 1}});
    case LieFamily::B2_2:
      return shape(2, {{2, -1}, {1, 1}});
  }
  throw InvalidParameters("unknown Lie family");
}

OrderShape suzuki_ree_sqrt_shape(LieFamily family) {
  switch (family) {
    case LieFamily::B2_2:
      return shape(4, {{4, -1}, {2, 1}});
    case LieFamily::G2_2:
      return shape(6, {{6, -1}, {2, 1}});
    case LieFamily::F4_2:
      return shape(24, {{12, -1}, {8, 1}, {6, -1}, {2, 1}});
    default:
      throw InvalidParameters(std::string(family_token(family)) + " is not a Suzuki or Ree family");
  }
}

BigInt center_divisor(LieFamily family, unsigned rank, std::uint64_t q) {
  if (!prime_power(q)) throw InvalidParameters("field size " + std::to_string(q) + " is not a prime power");
  const BigInt Q(static_cast<unsigned long>(q));
  switch (family) {
    case LieFamily::A:
      return gcd_u(rank + 1, Q - 1);
    case LieFamily::A2:
      return gcd_u(rank + 1, Q + 1);
    case LieFamily::B:
    case LieFamily::C:
    case LieFamily::E7:
      return gcd_u(2, Q - 1);
    case LieFamily::D:
      return gcd_u(4, pow(Q, rank) - 1);
    case LieFamily::D2:
      return gcd_u(4, pow(Q, rank) + 1);
    case LieFamily::E6:
      return gcd_u(3, Q - 1);
    case LieFamily::E6_2:
      return gcd_u(3, Q + 1);
    default:
      return 1;
  }
}

unsigned max_center_divisor(LieFamily family, unsigned rank) {
  switch (family) {
    case LieFamily::A:
    case LieFamily::A2:
      return rank + 1;
    case LieFamily::B:
    case LieFamily::C:
    case LieFamily::E7:
      return 2;
    case LieFamily::D:
    case LieFamily::D2:
      return 4;
    case LieFamily::E6:
    case LieFamily::E6_2:
      return 3;
    default:
      return 1;
  }
}

BigInt universal_order(LieFamily family, unsigned rank, std::uint64_t q) {
  return universal_shape(family, rank).evaluate(BigInt(static_cast<unsigned long>(q)));
}

BigInt order(const GroupId& g) {
  struct Visitor {
    BigInt operator()(const Cyclic& c) const { return BigInt(static_cast<unsigned long>(c.p)); }
    BigInt operator()(const Alternating& a) const {
      if (a.n < 2) return 1;
      return factorial(a.n) / 2;
    }
    BigInt operator()(const Lie& l) const {
      BigInt u = universal_order(l.family, l.rank, l.q);
      if (l.version == Version::Universal) return u;
      return u / center_divisor(l.family, l.rank, l.q);
    }
    BigInt operator()(const Sporadic& s) const {
      const auto* rec = builtin_sporadic_table().find(s.name);
      if (!rec) throw UnknownGroup("no order recorded for " + s.name);
      return rec->order;
    }
    BigInt operator()(const Tits&) const {
      return order(GroupId::lie(LieFamily::F4_2, 4, 2)) / 2;
    }
  };
  return std::visit(Visitor{}, g.value());
}

bool is_simple(const GroupId& g) {
  if (g.is_cyclic() || g.is_sporadic() || g.is_tits()) return true;
  if (g.is_alternating()) return g.as_alternating().n >= 5;
  const Lie& l = g.as_lie();
  if (l.version == Version::Universal && center_divisor(l.family, l.rank, l.q) != 1) return false;
  const auto r = l.rank;
  const auto q = l.q;
  switch (l.family) {
    case LieFamily::A:
      return !(r == 1 && (q == 2 || q == 3));
    case LieFamily::A2:
      return !(r == 2 && q == 2);
    case LieFamily::B:
    case LieFamily::C:
      return !(r == 2 && q == 2);
    case LieFamily::G2:
      return q != 2;
    case LieFamily::B2_2:
    case LieFamily::F4_2:
      return q != 2;
    case LieFamily::G2_2:
      return q != 3;
    default:
      return true;
  }
}

GroupId canonicalize(const GroupId& g) {
  if (!g.is_lie()) return g;
  Lie l = g.as_lie();
  if (l.version == Version::Universal) return g;

  // Low-rank coincidences between families first, then the sporadic
  // isomorphisms with alternating groups.
  if (l.family == LieFamily::D && l.rank == 3) l.family = LieFamily::A;
  if (l.family == LieFamily::D2 && l.rank == 3) l.family = LieFamily::A2;
  if (l.family == LieFamily::B && (l.rank == 2 || prime_power(l.q)->first == 2)) l.family = LieFamily::C;

  if (l.family == LieFamily::A) {
    if (l.rank == 1 && (l.q == 4 || l.q == 5)) return GroupId::alternating(5);
    if (l.rank == 1 && l.q == 9) return GroupId::alternating(6);
    if (l.rank == 2 && l.q == 2) return GroupId::lie(LieFamily::A, 1, 7);
    if (l.rank == 3 && l.q == 2) return GroupId::alternating(8);
  }
  if (l.family == LieFamily::A2 && l.rank == 3 && l.q == 2) return GroupId::lie(LieFamily::C, 2, 3);
  return GroupId::lie(l.family, l.rank, l.q, l.version);
}

BigInt sp_order(unsigned g) {
  if (g < 1) throw InvalidParameters("genus must be positive");
  BigInt out = pow2(static_cast<std::uint64_t>(g) * g);
  for (unsigned i = 1; i <= g; ++i) out *= pow2(2 * i) - 1;
  return out;
}

unsigned g_of_order(const BigInt& ord) {
  unsigned g = 1;
  while (!(ord < sp_order(g))) ++g;
  return g;
}

unsigned g_of(const GroupId& k) { return g_of_order(order(k)); }

}  // namespace spq
