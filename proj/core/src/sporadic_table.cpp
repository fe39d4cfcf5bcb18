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

#include "spq/sporadic_table.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "spq/catalog.hpp"
#include "spq/errors.hpp"

namespace spq {

namespace detail {
std::string_view embedded_table_text();
}

namespace {

struct PrimePower {
  unsigned p;
  unsigned e;
};

struct Factorisation {
  std::string_view name;
  std::vector<PrimePower> primes;
};

// Prime factorisations as listed in the ATLAS of Finite Groups. Kept apart
// from the decimal column so that a typo in either one shows up.
const std::vector<Factorisation>& atlas() {
  static const std::vector<Factorisation> table{
      {"M11", {{2, 4}, {3, 2}, {5, 1}, {11, 1}}},
      {"M12", {{2, 6}, {3, 3}, {5, 1}, {11, 1}}},
      {"J1", {{2, 3}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {19, 1}}},
      {"M22", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}}},
      {"J2", {{2, 7}, {3, 3}, {5, 2}, {7, 1}}},
      {"M23", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}},
      {"HS", {{2, 9}, {3, 2}, {5, 3}, {7, 1}, {11, 1}}},
      {"J3", {{2, 7}, {3, 5}, {5, 1}, {17, 1}, {19, 1}}},
      {"M24", {{2, 10}, {3, 3}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}},
      {"McL", {{2, 7}, {3, 6}, {5, 3}, {7, 1}, {11, 1}}},
      {"He", {{2, 10}, {3, 3}, {5, 2}, {7, 3}, {17, 1}}},
      {"Ru", {{2, 14}, {3, 3}, {5, 3}, {7, 1}, {13, 1}, {29, 1}}},
      {"Suz", {{2, 13}, {3, 7}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}},
      {"ON", {{2, 9}, {3, 4}, {5, 1}, {7, 3}, {11, 1}, {19, 1}, {31, 1}}},
      {"Co3", {{2, 10}, {3, 7}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}},
      {"Co2", {{2, 18}, {3, 6}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}},
      {"Fi22", {{2, 17}, {3, 9}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}},
      {"HN", {{2, 14}, {3, 6}, {5, 6}, {7, 1}, {11, 1}, {19, 1}}},
      {"Ly", {{2, 8}, {3, 7}, {5, 6}, {7, 1}, {11, 1}, {31, 1}, {37, 1}, {67, 1}}},
      {"Th", {{2, 15}, {3, 10}, {5, 3}, {7, 2}, {13, 1}, {19, 1}, {31, 1}}},
      {"Fi23", {{2, 18}, {3, 13}, {5, 2}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {23, 1}}},
      {"Co1", {{2, 21}, {3, 9}, {5, 4}, {7, 2}, {11, 1}, {13, 1}, {23, 1}}},
      {"J4", {{2, 21}, {3, 3}, {5, 1}, {7, 1}, {11, 3}, {23, 1}, {29, 1}, {31, 1}, {37, 1}, {43, 1}}},
      {"Fi24'", {{2, 21}, {3, 16}, {5, 2}, {7, 3}, {11, 1}, {13, 1}, {17, 1}, {23, 1}, {29, 1}}},
      {"B", {{2, 41}, {3, 13}, {5, 6}, {7, 2}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}, {31, 1}, {47, 1}}},
      {"M",
       {{2, 46}, {3, 20}, {5, 9}, {7, 6}, {11, 2}, {13, 3}, {17, 1}, {19, 1}, {23, 1}, {29, 1}, {31, 1},
        {41, 1}, {47, 1}, {59, 1}, {71, 1}}},
  };
  return table;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

BigInt parse_order(std::string_view field, std::size_t line) {
  if (field.empty() || !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(line, "order '" + std::string(field) + "' is not a decimal integer");
  }
  return parse_decimal(field);
}

// "Sp12(2)" -> 6
unsigned parse_reference_name(std::string_view field, std::size_t line) {
  const auto bad = [&] { return ParseError(line, "reference row must be named Sp<2g>(2), got '" + std::string(field) + "'"); };
  if (field.substr(0, 2) != "Sp" || field.size() < 6 || field.substr(field.size() - 3) != "(2)") throw bad();
  const std::string_view digits = field.substr(2, field.size() - 5);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw bad();
  }
  const unsigned dim = static_cast<unsigned>(std::stoul(std::string(digits)));
  if (dim < 2 || dim % 2 != 0) throw bad();
  return dim / 2;
}

}  // namespace

const SporadicRecord* SporadicTable::find(std::string_view name) const {
  for (const auto& r : sporadics) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

const BigInt& SporadicTable::row_order(const Row& r) const {
  return r.is_reference ? references[r.index].order : sporadics[r.index].order;
}

std::string SporadicTable::row_name(const Row& r) const {
  if (r.is_reference) return "Sp_" + std::to_string(2 * references[r.index].genus) + "(2)";
  return sporadics[r.index].name;
}

SporadicTable parse_sporadic_table(std::string_view text) {
  SporadicTable table;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto fields = split_ws(line);
    if (fields.empty()) continue;

    if (fields[0] == "reference") {
      if (fields.size() != 3) throw ParseError(line_no, "reference row needs a name and an order");
      table.references.push_back({parse_reference_name(fields[1], line_no), parse_order(fields[2], line_no)});
      table.rows.push_back({true, table.references.size() - 1, line_no});
    } else if (fields[0] == "sporadic") {
      if (fields.size() < 3) throw ParseError(line_no, "sporadic row needs a name and an order");
      SporadicRecord rec;
      try {
        rec.name = GroupId::sporadic(fields[1]).as_sporadic().name;
      } catch (const UnknownGroup& e) {
        throw ParseError(line_no, e.what());
      }
      rec.order = parse_order(fields[2], line_no);
      if (fields.size() >= 4) {
        const auto gk = parse_order(fields[3], line_no);
        if (gk < 1 || gk > 1000) throw ParseError(line_no, "g(K) out of range");
        rec.g_k = static_cast<unsigned>(gk.get_ui());
        std::vector<GroupId> factors;
        for (std::size_t i = 4; i < fields.size(); ++i) {
          try {
            factors.push_back(parse_group(fields[i]));
          } catch (const Error& e) {
            throw ParseError(line_no, "bad centraliser factor '" + std::string(fields[i]) + "': " + e.what());
          }
        }
        if (factors.empty()) throw ParseError(line_no, "g(K) given without centraliser factors");
        rec.centralizer_factors = std::move(factors);
      }
      if (table.find(rec.name)) throw ParseError(line_no, "duplicate row for " + rec.name);
      table.sporadics.push_back(std::move(rec));
      table.rows.push_back({false, table.sporadics.size() - 1, line_no});
    } else {
      throw ParseError(line_no, "unknown row kind '" + std::string(fields[0]) + "'");
    }
  }
  return table;
}

SporadicTable load_sporadic_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open sporadic table " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sporadic_table(buf.str());
}

std::string_view builtin_sporadic_table_text() { return detail::embedded_table_text(); }

const SporadicTable& builtin_sporadic_table() {
  static const SporadicTable table = parse_sporadic_table(builtin_sporadic_table_text());
  return table;
}

BigInt atlas_order(std::string_view name) {
  for (const auto& f : atlas()) {
    if (f.name != name) continue;
    BigInt out = 1;
    for (auto [p, e] : f.primes) out *= pow(BigInt(p), e);
    return out;
  }
  throw UnknownGroup("no factorisation recorded for " + std::string(name));
}

const std::vector<std::string>& rank_survivor_names() {
  static const std::vector<std::string> names{"McL", "Suz", "Co3", "Co2", "Fi22", "Fi23",
                                              "Co1", "J4",  "Fi24'", "B",  "M"};
  return names;
}

std::vector<TableCheck> check_sporadic_table(const SporadicTable& table) {
  std::vector<TableCheck> out;
  const auto add = [&](std::string name, bool ok, std::string detail) {
    out.push_back({std::move(name), ok, std::move(detail)});
  };

  {
    std::set<std::string> have;
    for (const auto& r : table.sporadics) have.insert(r.name);
    std::string missing;
    for (const auto& f : atlas()) {
      if (!have.count(std::string(f.name))) missing += " " + std::string(f.name);
    }
    add("all 26 sporadic groups present", missing.empty() && table.sporadics.size() == 26,
        missing.empty() ? std::to_string(table.sporadics.size()) + " rows" : "missing:" + missing);
  }

  for (const auto& r : table.sporadics) {
    const BigInt expected = atlas_order(r.name);
    add("order of " + r.name, r.order == expected,
        to_decimal(r.order) + (r.order == expected ? " matches" : " differs from") + " prime factorisation " +
            to_decimal(expected));
  }

  for (const auto& ref : table.references) {
    const BigInt expected = sp_order(ref.genus);
    add("reference Sp_" + std::to_string(2 * ref.genus) + "(2)", ref.order == expected,
        to_decimal(ref.order) + (ref.order == expected ? " = " : " != ") + "2^(g^2) prod (4^i - 1) = " +
            to_decimal(expected));
  }

  {
    std::string detail = "rows strictly increasing";
    bool ok = true;
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
      if (!(table.row_order(table.rows[i - 1]) < table.row_order(table.rows[i]))) {
        ok = false;
        detail = "line " + std::to_string(table.rows[i].line) + " (" + table.row_name(table.rows[i]) +
                 ") is not larger than the row before it";
        break;
      }
    }
    add("ascending order", ok, detail);
  }

  {
    // Reference rows must run g = 2, 3, ... and every sporadic must sit in
    // the block closed by the first reference row larger than it.
    bool ok = true;
    std::string detail = "every sporadic lies between its bracketing Sp rows";
    for (std::size_t i = 0; i < table.references.size(); ++i) {
      if (table.references[i].genus != i + 2) {
        ok = false;
        detail = "reference rows are not Sp_4(2), Sp_6(2), ... in sequence";
      }
    }
    for (std::size_t i = 0; ok && i < table.rows.size(); ++i) {
      const auto& row = table.rows[i];
      if (row.is_reference) continue;
      const BigInt& ord = table.row_order(row);
      const ReferenceRow* below = nullptr;
      const ReferenceRow* above = nullptr;
      for (std::size_t j = i; j-- > 0;) {
        if (table.rows[j].is_reference) {
          below = &table.references[table.rows[j].index];
          break;
        }
      }
      for (std::size_t j = i + 1; j < table.rows.size(); ++j) {
        if (table.rows[j].is_reference) {
          above = &table.references[table.rows[j].index];
          break;
        }
      }
      if (!below || !above || !(below->order < ord && ord < above->order) || above->genus != g_of_order(ord)) {
        ok = false;
        detail = table.row_name(row) + " is not bracketed by consecutive Sp rows";
      }
    }
    add("table blocks", ok, detail);
  }

  {
    std::set<std::string> expected(rank_survivor_names().begin(), rank_survivor_names().end());
    std::set<std::string> listed;
    for (const auto& r : table.sporadics) {
      if (r.g_k) listed.insert(r.name);
    }
    add("rows carrying g(K)", listed == expected, std::to_string(listed.size()) + " rows");
    for (const auto& r : table.sporadics) {
      if (!r.g_k) continue;
      const unsigned g = g_of_order(r.order);
      add("g(" + r.name + ")", g == *r.g_k,
          "listed " + std::to_string(*r.g_k) + ", smallest g with |K| < |Sp_2g(2)| is " + std::to_string(g));
      bool smaller = true;
      std::string which;
      for (const auto& f : *r.centralizer_factors) {
        if (f.is_sporadic() && f.as_sporadic().name == r.name) smaller = false;
        if (f.is_sporadic()) {
          const auto* fr = table.find(f.as_sporadic().name);
          if (!fr || !(fr->order < r.order)) {
            smaller = false;
            which = f.name();
          }
        } else if (!(order(f) < r.order)) {
          smaller = false;
          which = f.name();
        }
      }
      add("centraliser factors of " + r.name + " are smaller", smaller,
          smaller ? std::to_string(r.centralizer_factors->size()) + " factors" : "offending factor " + which);
    }
  }
  return out;
}

bool all_ok(const std::vector<TableCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const TableCheck& c) { return c.ok; });
}

}  // namespace spq
