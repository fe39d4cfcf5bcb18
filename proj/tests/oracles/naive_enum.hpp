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

// A deliberately dumb enumeration of simple groups of order <= N: walk a box
// of (family, rank, q) far larger than needed, ask order() for each point and
// keep what fits. Simplicity exceptions and isomorphism folding are written
// out here again rather than taken from the library.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spq/catalog.hpp"
#include "spq/group_id.hpp"
#include "spq/sporadic_table.hpp"

namespace oracle {

struct Entry {
  std::string name;
  mpz_class order;
  bool operator<(const Entry& o) const { return order != o.order ? order < o.order : name < o.name; }
  bool operator==(const Entry& o) const { return name == o.name && order == o.order; }
};

inline bool is_prime_naive(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// (p, k) or (0, 0).
inline std::pair<std::uint64_t, unsigned> split(std::uint64_t q) {
  for (std::uint64_t p = 2; p <= q; ++p) {
    if (!is_prime_naive(p) || q % p) continue;
    unsigned k = 0;
    while (q % p == 0) {
      q /= p;
      ++k;
    }
    return q == 1 ? std::make_pair(p, k) : std::make_pair(std::uint64_t{0}, 0u);
  }
  return {0, 0};
}

inline std::vector<Entry> naive_simple_groups(const mpz_class& bound, unsigned max_rank = 12,
                                              std::uint64_t max_q = 4096, unsigned max_alt = 20) {
  using spq::GroupId;
  using spq::LieFamily;
  std::set<Entry> found;
  auto keep = [&](const GroupId& g) {
    const mpz_class o = spq::order(g);
    if (o <= bound) found.insert({g.name(), o});
  };

  mpz_class fact = 1;
  for (unsigned n = 2; n <= max_alt; ++n) {
    fact *= n;
    if (n >= 5 && fact / 2 <= bound) found.insert({GroupId::alternating(n).name(), fact / 2});
  }

  for (std::uint64_t q = 2; q <= max_q; ++q) {
    const auto [p, k] = split(q);
    if (p == 0) continue;
    for (unsigned n = 1; n <= max_rank; ++n) {
      // A_n: A_1(2), A_1(3) are solvable; the rest fold onto alternating or A_1(7).
      if (!(n == 1 && (q == 2 || q == 3))) {
        if (n == 1 && (q == 4 || q == 5)) {
          keep(GroupId::alternating(5));
        } else if (n == 1 && q == 9) {
          keep(GroupId::alternating(6));
        } else if (n == 2 && q == 2) {
          keep(GroupId::lie(LieFamily::A, 1, 7));
        } else if (n == 3 && q == 2) {
          keep(GroupId::alternating(8));
        } else {
          keep(GroupId::lie(LieFamily::A, n, q));
        }
      }
      // 2A_n, n >= 2: 2A_2(2) is solvable, 2A_3(2) = C_2(3).
      if (n >= 2 && !(n == 2 && q == 2)) {
        if (n == 3 && q == 2) {
          keep(GroupId::lie(LieFamily::C, 2, 3));
        } else {
          keep(GroupId::lie(LieFamily::A2, n, q));
        }
      }
      // B_n and C_n for n >= 2 (B_2 = C_2; B = C in characteristic 2);
      // B_2(2) = C_2(2) = Sym_6 is not simple.
      if (n >= 2 && !(n == 2 && q == 2)) {
        keep(GroupId::lie(LieFamily::C, n, q));
        if (n >= 3 && p != 2) keep(GroupId::lie(LieFamily::B, n, q));
      }
      if (n >= 4) {
        keep(GroupId::lie(LieFamily::D, n, q));
        keep(GroupId::lie(LieFamily::D2, n, q));
      }
    }
    // Exceptional families, one rank each.
    keep(GroupId::lie(LieFamily::D4_3, q));
    if (q != 2) keep(GroupId::lie(LieFamily::G2, q));
    keep(GroupId::lie(LieFamily::F4, q));
    keep(GroupId::lie(LieFamily::E6, q));
    keep(GroupId::lie(LieFamily::E6_2, q));
    keep(GroupId::lie(LieFamily::E7, q));
    keep(GroupId::lie(LieFamily::E8, q));
    if (p == 2 && k % 2 == 1 && q > 2) {
      keep(GroupId::lie(LieFamily::B2_2, q));
      keep(GroupId::lie(LieFamily::F4_2, q));
    }
    if (p == 3 && k % 2 == 1 && q > 3) keep(GroupId::lie(LieFamily::G2_2, q));
  }

  for (const auto& rec : spq::builtin_sporadic_table().sporadics)
    if (rec.order <= bound) found.insert({rec.name, rec.order});
  const mpz_class tits = spq::order(GroupId::tits());
  if (tits <= bound) found.insert({GroupId::tits().name(), tits});

  return {found.begin(), found.end()};
}

}  // namespace oracle
