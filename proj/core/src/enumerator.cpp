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

#include "spq/enumerator.hpp"

#include <algorithm>
#include <map>

#include "spq/catalog.hpp"
#include "spq/errors.hpp"
#include "spq/sporadic_table.hpp"

namespace spq {

namespace {

struct FamilyPlan {
  LieFamily family;
  unsigned first_rank;
  FieldClass field;
};

// Families walked by the enumerator. B_2, D_3, 2D_3 and B_n in even
// characteristic are left out because canonicalize() sends them to C_2, A_3,
// 2A_3 and C_n, which are walked anyway.
constexpr FamilyPlan kPlans[] = {
    {LieFamily::A, 1, FieldClass::AnyPrimePower},    {LieFamily::A2, 2, FieldClass::AnyPrimePower},
    {LieFamily::B, 3, FieldClass::OddPrimePower},    {LieFamily::C, 2, FieldClass::AnyPrimePower},
    {LieFamily::D, 4, FieldClass::AnyPrimePower},    {LieFamily::D2, 4, FieldClass::AnyPrimePower},
    {LieFamily::D4_3, 4, FieldClass::AnyPrimePower}, {LieFamily::G2, 2, FieldClass::AnyPrimePower},
    {LieFamily::F4, 4, FieldClass::AnyPrimePower},   {LieFamily::E6, 6, FieldClass::AnyPrimePower},
    {LieFamily::E6_2, 6, FieldClass::AnyPrimePower}, {LieFamily::E7, 7, FieldClass::AnyPrimePower},
    {LieFamily::E8, 8, FieldClass::AnyPrimePower},
};

class Collector {
 public:
  explicit Collector(const BigInt& bound) : bound_(bound) {}

  void add(const GroupId& g, const BigInt& ord) {
    if (ord > bound_ || !is_simple(g)) return;
    found_.emplace(canonicalize(g), ord);
  }

  std::vector<EnumeratedGroup> sorted() const {
    std::vector<EnumeratedGroup> out;
    out.reserve(found_.size());
    for (const auto& [g, o] : found_) out.push_back({g, o});
    std::sort(out.begin(), out.end(), [](const EnumeratedGroup& a, const EnumeratedGroup& b) {
      if (a.order != b.order) return a.order < b.order;
      return a.group.name() < b.group.name();
    });
    return out;
  }

 private:
  BigInt bound_;
  std::map<GroupId, BigInt> found_;
};

bool admits(FieldClass field, std::uint64_t q) { return field == FieldClass::AnyPrimePower || q % 2 == 1; }

// Largest integer q with shape(q) <= cap; shape is increasing for q >= 2.
BigInt largest_q_below(const OrderShape& shape, const BigInt& cap, const BigInt& start) {
  BigInt lo = start;  // shape(lo) <= cap
  BigInt hi = start * 2;
  while (shape.evaluate(hi) <= cap) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (shape.evaluate(mid) <= cap) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

void walk_family(const FamilyPlan& plan, const BigInt& bound, const std::vector<std::uint64_t>& qs,
                 std::uint64_t limit, Collector& out, std::vector<LieSeries>& series) {
  const auto fixed = fixed_rank(plan.family);
  const std::uint64_t q_min = plan.field == FieldClass::OddPrimePower ? 3 : 2;
  BigInt previous_rank_order = 0;
  for (unsigned rank = plan.first_rank;; ++rank) {
    if (fixed && rank != *fixed) break;
    const OrderShape shape = universal_shape(plan.family, rank);
    const BigInt cap = bound * max_center_divisor(plan.family, rank);
    const BigInt smallest = shape.evaluate(q_min);
    if (smallest <= previous_rank_order) {
      throw Error("internal: order of " + std::string(family_token(plan.family)) + " not increasing in rank at rank " +
                  std::to_string(rank));
    }
    previous_rank_order = smallest;
    if (smallest > cap) break;

    BigInt previous = 0;
    bool cut = false;
    for (std::uint64_t q : qs) {
      if (!admits(plan.field, q)) continue;
      const BigInt u = shape.evaluate(q);
      if (u <= previous) {
        throw Error("internal: order of " + std::string(family_token(plan.family)) + "_" + std::to_string(rank) +
                    " not increasing in q at q = " + std::to_string(q));
      }
      previous = u;
      if (u > cap) {
        cut = true;
        break;
      }
      const GroupId g = GroupId::lie(plan.family, rank, q);
      out.add(g, u / center_divisor(plan.family, rank, q));
    }
    if (!cut) {
      const BigInt q_hi = largest_q_below(shape, cap, BigInt(static_cast<unsigned long>(limit)));
      if (q_hi > limit) {
        series.push_back({plan.family, rank, BigInt(static_cast<unsigned long>(limit)) + 1, q_hi, plan.field});
      }
    }
  }
}

// 2B2, 2F4 over 2^(2m+1) and 2G2 over 3^(2m+1): sparse, always explicit.
void walk_suzuki_ree(LieFamily family, std::uint64_t p, const BigInt& bound, Collector& out) {
  const OrderShape shape = universal_shape(family, *fixed_rank(family));
  BigInt previous = 0;
  for (unsigned e = 1;; e += 2) {
    const BigInt q = pow(BigInt(static_cast<unsigned long>(p)), e);
    const BigInt u = shape.evaluate(q);
    if (u <= previous) throw Error("internal: Suzuki/Ree order not increasing");
    previous = u;
    if (u > bound) break;
    out.add(GroupId::lie(family, to_u64(q)), u);
  }
}

}  // namespace

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t m = p * p; m <= limit; m += p) composite[m] = true;
    for (std::uint64_t q = p;; q *= p) {
      out.push_back(q);
      if (q > limit / p) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string LieSeries::name() const {
  std::string s = std::string(family_token(family));
  if (!fixed_rank(family)) s += "_" + std::to_string(rank);
  s += "(q), q ";
  s += field == FieldClass::OddPrimePower ? "an odd prime power" : "a prime power";
  s += " in [" + to_decimal(q_lo) + ", " + to_decimal(q_hi) + "]";
  return s;
}

EnumerationResult enumerate_simple_below(const BigInt& bound, std::uint64_t explicit_q_limit) {
  if (bound < 60) throw InvalidParameters("bound must be at least 60");
  if (explicit_q_limit < 16) throw InvalidParameters("explicit q limit must be at least 16");
  Collector out(bound);
  std::vector<LieSeries> series;

  BigInt alt = 60;
  for (std::uint64_t n = 5; alt <= bound; ++n) {
    out.add(GroupId::alternating(n), alt);
    alt *= static_cast<unsigned long>(n + 1);
  }

  const auto qs = prime_powers_up_to(explicit_q_limit);
  for (const auto& plan : kPlans) walk_family(plan, bound, qs, explicit_q_limit, out, series);
  walk_suzuki_ree(LieFamily::B2_2, 2, bound, out);
  walk_suzuki_ree(LieFamily::G2_2, 3, bound, out);
  walk_suzuki_ree(LieFamily::F4_2, 2, bound, out);

  for (const auto& rec : builtin_sporadic_table().sporadics) out.add(GroupId::sporadic(rec.name), rec.order);
  out.add(GroupId::tits(), order(GroupId::tits()));

  return {bound, explicit_q_limit, out.sorted(), std::move(series)};
}

}  // namespace spq
