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

// The exclusion pipeline: every simple group of order at most |Sp_2g(2)| is
// either excluded by one of the rules below or reported as a survivor.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spq/enumerator.hpp"
#include "spq/group_id.hpp"
#include "spq/sporadic_table.hpp"

namespace spq {

enum class Rule {
  AltPermDegree,
  AltOrderChain,
  ClassicalProjDim,
  ClassicalPermDegree,
  ClassicalUniqueness,
  ExcRank,
  ExcDThree,
  ExcOrderIneq,
  SporadicRank,
  SporadicCentralizer,
};

/// "ALT_PERM_DEGREE", ...
std::string_view rule_id(Rule r);
/// Short statement of the argument behind the rule.
std::string_view rule_citation(Rule r);

struct Witness {
  std::string key;
  std::string value;  // decimal or a group name
};

struct FactorCheck {
  GroupId factor;
  GroupId canonical;
  bool excluded = false;
  std::string reason;
  std::vector<Witness> witness;
};

struct Verdict {
  enum class Kind { Excluded, Survivor, Unresolved };
  Kind kind = Kind::Unresolved;
  std::optional<Rule> rule;
  std::vector<Witness> witness;
  std::string reason;
  std::vector<FactorCheck> factors;  // SPORADIC_CENTRALIZER only

  bool excluded() const { return kind == Kind::Excluded; }
};

std::string_view verdict_kind_name(Verdict::Kind k);

/// Classifies one simple group at genus g >= 3. Throws OutOfScope when
/// |k| > |Sp_2g(2)| and PreconditionViolated for non-simple or abelian k.
Verdict classify(const GroupId& k, unsigned g, const SporadicTable& table = builtin_sporadic_table());

/// Classifies a whole block of Lie-type groups that share family and rank.
Verdict classify_series(const LieSeries& s, unsigned g);

struct ReportEntry {
  GroupId group;
  BigInt order;
  Verdict verdict;
};

struct SeriesEntry {
  LieSeries series;
  Verdict verdict;
};

struct ExclusionReport {
  unsigned genus = 0;
  BigInt bound;
  std::vector<ReportEntry> entries;  // sorted by (order, name)
  std::vector<SeriesEntry> series;
  std::vector<std::string> survivors;  // names, entries first then series

  /// Survivors are exactly {C_g(2)}.
  bool theorem_holds() const;
};

inline constexpr std::uint64_t kPipelineQLimit = 1024;

ExclusionReport run_pipeline(unsigned g, std::uint64_t explicit_q_limit = kPipelineQLimit,
                             const SporadicTable& table = builtin_sporadic_table());

}  // namespace spq
