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

#include "spq/group_id.hpp"

#include <array>
#include <utility>

#include "spq/errors.hpp"

namespace spq {

namespace {

struct FamilyInfo {
  LieFamily family;
  std::string_view token;  // CLI token, e.g. "3D4"
  std::string_view twist;  // "", "2", "3"
  char letter;
  unsigned fixed_rank;     // 0 for classical families
  unsigned min_rank;
};

constexpr std::array<FamilyInfo, 16> kFamilies{{
    {LieFamily::A, "A", "", 'A', 0, 1},
    {LieFamily::A2, "2A", "2", 'A', 0, 2},
    {LieFamily::B, "B", "", 'B', 0, 2},
    {LieFamily::C, "C", "", 'C', 0, 2},
    {LieFamily::D, "D", "", 'D', 0, 3},
    {LieFamily::D2, "2D", "2", 'D', 0, 3},
    {LieFamily::D4_3, "3D4", "3", 'D', 4, 4},
    {LieFamily::G2, "G2", "", 'G', 2, 2},
    {LieFamily::G2_2, "2G2", "2", 'G', 2, 2},
    {LieFamily::F4, "F4", "", 'F', 4, 4},
    {LieFamily::F4_2, "2F4", "2", 'F', 4, 4},
    {LieFamily::E6, "E6", "", 'E', 6, 6},
    {LieFamily::E6_2, "2E6", "2", 'E', 6, 6},
    {LieFamily::E7, "E7", "", 'E', 7, 7},
    {LieFamily::E8, "E8", "", 'E', 8, 8},
    {LieFamily::B2_2, "2B2", "2", 'B', 2, 2},
}};

const FamilyInfo& info(LieFamily f) {
  for (const auto& fi : kFamilies) {
    if (fi.family == f) return fi;
  }
  throw InvalidParameters("unknown Lie family");
}

constexpr std::array<std::string_view, 26> kSporadicNames{
    "M11", "M12", "J1", "M22", "J2",  "M23", "HS",  "J3",  "M24", "McL", "He",    "Ru", "Suz",
    "ON",  "Co3", "Co2", "Fi22", "HN", "Ly", "Th", "Fi23", "Co1", "J4", "Fi24'", "B",  "M"};

std::optional<std::string_view> canonical_sporadic(std::string_view raw) {
  std::string s;
  for (char c : raw) {
    if (c != '_') s.push_back(c);
  }
  if (s == "O'N") s = "ON";
  if (s == "Fi24p" || s == "Fi24") s = "Fi24'";
  if (s == "MCL") s = "McL";
  for (auto name : kSporadicNames) {
    if (name == s) return name;
  }
  return std::nullopt;
}

}  // namespace

std::string_view family_token(LieFamily f) { return info(f).token; }

std::optional<LieFamily> family_from_token(std::string_view token) {
  for (const auto& fi : kFamilies) {
    if (fi.token == token) return fi.family;
  }
  return std::nullopt;
}

bool is_classical(LieFamily f) {
  switch (f) {
    case LieFamily::A:
    case LieFamily::A2:
    case LieFamily::B:
    case LieFamily::C:
    case LieFamily::D:
    case LieFamily::D2:
      return true;
    default:
      return false;
  }
}

bool is_suzuki_ree(LieFamily f) {
  return f == LieFamily::B2_2 || f == LieFamily::G2_2 || f == LieFamily::F4_2;
}

std::optional<unsigned> fixed_rank(LieFamily f) {
  unsigned r = info(f).fixed_rank;
  if (r == 0) return std::nullopt;
  return r;
}

unsigned min_rank(LieFamily f) { return info(f).min_rank; }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::make_pair(q, 1u);
  unsigned k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(p, k);
}

GroupId GroupId::cyclic(std::uint64_t p) {
  if (!is_prime(p)) throw InvalidParameters("cyclic parameter " + std::to_string(p) + " is not prime");
  return GroupId(Cyclic{p});
}

GroupId GroupId::alternating(std::uint64_t n) {
  if (n < 1) throw InvalidParameters("alternating degree must be positive");
  return GroupId(Alternating{n});
}

GroupId GroupId::lie(LieFamily family, unsigned rank, std::uint64_t q, Version v) {
  const auto& fi = info(family);
  auto pp = prime_power(q);
  if (!pp) throw InvalidParameters("field size " + std::to_string(q) + " is not a prime power");
  if (fi.fixed_rank != 0 && rank != fi.fixed_rank) {
    throw InvalidParameters(std::string(fi.token) + " has rank " + std::to_string(fi.fixed_rank));
  }
  if (rank < fi.min_rank) {
    throw InvalidParameters(std::string(fi.token) + " needs rank >= " + std::to_string(fi.min_rank));
  }
  if (family == LieFamily::B2_2 || family == LieFamily::F4_2) {
    if (pp->first != 2 || pp->second % 2 == 0) {
      throw InvalidParameters(std::string(fi.token) + " is only defined over fields of order 2^(2m+1)");
    }
  }
  if (family == LieFamily::G2_2 && (pp->first != 3 || pp->second % 2 == 0)) {
    throw InvalidParameters("2G2 is only defined over fields of order 3^(2m+1)");
  }
  return GroupId(Lie{family, rank, q, v});
}

GroupId GroupId::lie(LieFamily family, std::uint64_t q, Version v) {
  auto r = fixed_rank(family);
  if (!r) throw InvalidParameters(std::string(family_token(family)) + " needs an explicit rank");
  return lie(family, *r, q, v);
}

GroupId GroupId::sporadic(std::string_view name) {
  auto canon = canonical_sporadic(name);
  if (!canon) throw UnknownGroup("unknown sporadic group '" + std::string(name) + "'");
  return GroupId(Sporadic{std::string(*canon)});
}

GroupId GroupId::tits() { return GroupId(Tits{}); }

std::string GroupId::name() const {
  struct Namer {
    std::string operator()(const Cyclic& c) const { return "Z_" + std::to_string(c.p); }
    std::string operator()(const Alternating& a) const { return "Alt_" + std::to_string(a.n); }
    std::string operator()(const Lie& l) const {
      const auto& fi = info(l.family);
      std::string s = std::string(fi.twist) + fi.letter + "_" + std::to_string(l.rank) + "(" +
                      std::to_string(l.q) + ")";
      if (l.version == Version::Universal) s += " [universal]";
      return s;
    }
    std::string operator()(const Sporadic& s) const { return s.name; }
    std::string operator()(const Tits&) const { return "Tits"; }
  };
  return std::visit(Namer{}, value_);
}

}  // namespace spq
