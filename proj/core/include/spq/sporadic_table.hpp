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

// The sporadic data table: orders of the 26 sporadic groups interleaved with
// the Sp_2g(2) reference rows, plus g(K) and centraliser factors for the
// groups that survive the rank filter. See data/sporadic_table.txt for the
// file format.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spq/exact_arith.hpp"
#include "spq/group_id.hpp"

namespace spq {

struct SporadicRecord {
  std::string name;
  BigInt order;
  std::optional<unsigned> g_k;
  std::optional<std::vector<GroupId>> centralizer_factors;
};

struct ReferenceRow {
  unsigned genus;  // the row is Sp_{2 genus}(2)
  BigInt order;
};

struct SporadicTable {
  struct Row {
    bool is_reference;
    std::size_t index;  // into sporadics or references
    std::size_t line;
  };

  std::vector<SporadicRecord> sporadics;
  std::vector<ReferenceRow> references;
  std::vector<Row> rows;  // file order

  const SporadicRecord* find(std::string_view name) const;
  const BigInt& row_order(const Row& r) const;
  std::string row_name(const Row& r) const;
};

/// Throws ParseError whose position is the 1-based line number.
SporadicTable parse_sporadic_table(std::string_view text);
SporadicTable load_sporadic_table(const std::filesystem::path& path);

std::string_view builtin_sporadic_table_text();
const SporadicTable& builtin_sporadic_table();

/// Order of a sporadic group recomputed from its prime factorisation; this is
/// the cross-check for the transcribed decimal orders.
BigInt atlas_order(std::string_view name);

/// The eleven groups whose 3- or 4-rank is not below g(K).
const std::vector<std::string>& rank_survivor_names();

struct TableCheck {
  std::string name;
  bool ok;
  std::string detail;
};

/// Every consistency check on a loaded table: presence of all 26 names, the
/// factorisation cross-check, reference rows against the Sp formula, ascending
/// order, block consistency, and the g(K) column.
std::vector<TableCheck> check_sporadic_table(const SporadicTable& table);
bool all_ok(const std::vector<TableCheck>& checks);

}  // namespace spq
