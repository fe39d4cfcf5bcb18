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

#include "spq/rank_bounds.hpp"

#include <algorithm>

#include "spq/catalog.hpp"
#include "spq/errors.hpp"

namespace spq {

std::uint64_t multiplicative_order(const BigInt& q, std::uint64_t p) {
  if (p < 2) throw InvalidParameters("modulus must be at least 2");
  const BigInt P(static_cast<unsigned long>(p));
  BigInt r = q % P;
  if (r < 0) r += P;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), P.get_mpz_t());
  if (g != 1) throw NotCoprime(to_decimal(q) + " and " + std::to_string(p) + " are not coprime");
  BigInt x = r;
  for (std::uint64_t m = 1; m <= p; ++m) {
    if (x == 1) return m;
    x = (x * r) % P;
  }
  throw Error("internal: no multiplicative order found");
}

PRankBound p_rank_upper_bound(const GroupId& g, std::uint64_t p) {
  if (!g.is_lie()) throw InvalidParameters(g.name() + " is not of Lie type");
  const Lie& l = g.as_lie();
  if (p == 2 || !is_prime(p)) throw InvalidPrime(std::to_string(p) + " is not an odd prime");
  if (l.q % p == 0) throw InvalidPrime(std::to_string(p) + " is the defining characteristic of " + g.name());

  const BigInt q(static_cast<unsigned long>(l.q));
  const std::uint64_t m0 = multiplicative_order(q, p);
  PRankBound out{g, p, m0, 0, m0};
  if (is_suzuki_ree(l.family)) {
    // s has order m0 or 2 m0 modulo p when s^2 = q has order m0; only 2 m0
    // is possible when m0 is even.
    const auto f = suzuki_ree_sqrt_shape(l.family).factorization();
    std::vector<std::uint64_t> candidates{2 * m0};
    if (m0 % 2 == 1) candidates.push_back(m0);
    for (auto d : candidates) {
      if (f.multiplicity(d) > out.bound || (f.multiplicity(d) == out.bound && d < out.cyclotomic_index)) {
        out.bound = f.multiplicity(d);
        out.cyclotomic_index = d;
      }
    }
    if (out.bound == 0) out.cyclotomic_index = candidates.front();
    return out;
  }
  out.bound = universal_shape(l.family, l.rank).factorization().multiplicity(m0);
  return out;
}

bool sporadic_rank_excluded(const SporadicRecord& k) { return !k.g_k.has_value(); }

std::uint64_t max_factor_multiplicity(LieFamily family, unsigned rank) {
  std::uint64_t worst = 0;
  auto scan = [&](const OrderShape& s) {
    for (const auto& f : s.factors) {
      for (const auto& [d, e] : factor_cyclotomic(f).factors) worst = std::max(worst, e);
    }
  };
  scan(universal_shape(family, rank));
  if (is_suzuki_ree(family)) scan(suzuki_ree_sqrt_shape(family));
  return worst;
}

}  // namespace spq
