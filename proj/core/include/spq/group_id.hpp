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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace spq {

enum class LieFamily {
  A,     // linear
  A2,    // 2A, unitary
  B,
  C,
  D,
  D2,    // 2D
  D4_3,  // 3D4
  G2,
  G2_2,  // 2G2, Ree
  F4,
  F4_2,  // 2F4, Ree
  E6,
  E6_2,  // 2E6
  E7,
  E8,
  B2_2,  // 2B2, Suzuki
};

inline constexpr LieFamily kAllFamilies[] = {
    LieFamily::A,  LieFamily::A2,   LieFamily::B,  LieFamily::C,    LieFamily::D,  LieFamily::D2,
    LieFamily::D4_3, LieFamily::G2, LieFamily::G2_2, LieFamily::F4, LieFamily::F4_2, LieFamily::E6,
    LieFamily::E6_2, LieFamily::E7, LieFamily::E8, LieFamily::B2_2};

/// "A", "2A", ..., "3D4", "2B2": the token used in names and on the CLI.
std::string_view family_token(LieFamily f);
std::optional<LieFamily> family_from_token(std::string_view token);

bool is_classical(LieFamily f);
bool is_suzuki_ree(LieFamily f);
/// Exceptional families have a fixed rank (the subscript of the type).
std::optional<unsigned> fixed_rank(LieFamily f);
/// Smallest rank accepted in a GroupId. D and 2D allow rank 3 and C allows
/// rank 2 so that aliases such as 2D_3(2) and C_2(3) can be written down;
/// canonicalize() folds them.
unsigned min_rank(LieFamily f);

enum class Version { Adjoint, Universal };

struct Cyclic {
  std::uint64_t p;
  auto operator<=>(const Cyclic&) const = default;
};
struct Alternating {
  std::uint64_t n;
  auto operator<=>(const Alternating&) const = default;
};
struct Lie {
  LieFamily family;
  unsigned rank;
  std::uint64_t q;
  Version version = Version::Adjoint;
  auto operator<=>(const Lie&) const = default;
};
struct Sporadic {
  std::string name;
  auto operator<=>(const Sporadic&) const = default;
};
struct Tits {
  auto operator<=>(const Tits&) const = default;
};

/// Identifier of a finite (mostly simple) group by its place in the
/// classification. Construction validates parameters and throws
/// InvalidParameters otherwise.
class GroupId {
 public:
  using Variant = std::variant<Cyclic, Alternating, Lie, Sporadic, Tits>;

  static GroupId cyclic(std::uint64_t p);
  static GroupId alternating(std::uint64_t n);
  static GroupId lie(LieFamily family, unsigned rank, std::uint64_t q, Version v = Version::Adjoint);
  /// Exceptional family with its fixed rank.
  static GroupId lie(LieFamily family, std::uint64_t q, Version v = Version::Adjoint);
  static GroupId sporadic(std::string_view name);
  static GroupId tits();

  const Variant& value() const noexcept { return value_; }
  bool is_cyclic() const { return std::holds_alternative<Cyclic>(value_); }
  bool is_alternating() const { return std::holds_alternative<Alternating>(value_); }
  bool is_lie() const { return std::holds_alternative<Lie>(value_); }
  bool is_sporadic() const { return std::holds_alternative<Sporadic>(value_); }
  bool is_tits() const { return std::holds_alternative<Tits>(value_); }
  const Lie& as_lie() const { return std::get<Lie>(value_); }
  const Alternating& as_alternating() const { return std::get<Alternating>(value_); }
  const Sporadic& as_sporadic() const { return std::get<Sporadic>(value_); }

  /// Display name, e.g. "Alt_8", "2A_5(2)", "G_2(3)", "Fi24'", "Tits".
  /// Universal versions carry a " [universal]" suffix.
  std::string name() const;

  auto operator<=>(const GroupId&) const = default;

 private:
  explicit GroupId(Variant v) : value_(std::move(v)) {}
  Variant value_;
};

/// Parses the CLI name grammar (see README): "A(3,2)", "A_3(2)", "2A(5,2)",
/// "Sp(6,2)", "L(3,4)", "U(4,3)", "O(7,3)", "O+(8,2)", "O-(8,2)", "G2(3)",
/// "2B2(8)", "Alt(8)", "Alt_8", "Z(7)", "M11", "Fi24'", "Tits".
GroupId parse_group(std::string_view text);

bool is_prime(std::uint64_t n);
/// Returns (p, k) with q = p^k, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q);

}  // namespace spq
