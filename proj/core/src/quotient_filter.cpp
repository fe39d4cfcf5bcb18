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

#include "spq/quotient_filter.hpp"

#include "spq/alt_chain.hpp"
#include "spq/catalog.hpp"
#include "spq/degrees.hpp"
#include "spq/errors.hpp"
#include "spq/rank_bounds.hpp"

namespace spq {

namespace {

std::string dec(const BigInt& v) { return to_decimal(v); }
std::string dec(std::uint64_t v) { return std::to_string(v); }

Verdict excluded(Rule r, std::vector<Witness> w, std::string reason) {
  Verdict v;
  v.kind = Verdict::Kind::Excluded;
  v.rule = r;
  v.witness = std::move(w);
  v.reason = std::move(reason);
  return v;
}

Verdict unresolved(std::vector<Witness> w, std::string reason) {
  Verdict v;
  v.kind = Verdict::Kind::Unresolved;
  v.witness = std::move(w);
  v.reason = std::move(reason);
  return v;
}

bool g3_carve_out(LieFamily f, unsigned g) { return g == 3 && (f == LieFamily::G2 || f == LieFamily::G2_2); }

bool levi_excluded(LieFamily f) { return f == LieFamily::D4_3 || f == LieFamily::F4_2; }

// Smallest simple group in an exceptional family; used by the order rule.
GroupId smallest_member(LieFamily f) {
  switch (f) {
    case LieFamily::G2:
      return GroupId::lie(f, 3);
    case LieFamily::G2_2:
      return GroupId::lie(f, 27);
    case LieFamily::B2_2:
      return GroupId::lie(f, 8);
    default:
      return GroupId::lie(f, 2);
  }
}

Verdict classify_alternating(std::uint64_t n, unsigned g) {
  const BigInt index = mcg_min_index(g);
  if (BigInt(static_cast<unsigned long>(n)) < index) {
    return excluded(Rule::AltPermDegree, {{"degree", dec(n)}, {"min_index", dec(index)}},
                    "acts on " + dec(n) + " < " + dec(index) + " points");
  }
  // Unreachable while the chain holds: such a group is already larger than
  // Sp_2g(2) and classify() refuses it as out of scope.
  const ProofTrace chain = verify_alt_chain(g, {.exact_factorial = false});
  std::vector<Witness> w{{"degree", dec(n)}, {"min_index", dec(index)}, {"chain_ok", chain.ok() ? "true" : "false"}};
  if (chain.ok()) {
    return excluded(Rule::AltOrderChain, std::move(w),
                    "degree " + dec(n) + " >= " + dec(index) + ", so the order exceeds |Sp_2g(2)|");
  }
  return unresolved(std::move(w), "alternating chain failed at step " + dec(chain.first_failure()));
}

Verdict classify_classical(const Lie& l, unsigned g) {
  const GroupId k = GroupId::lie(l.family, l.rank, l.q);
  const unsigned dim = natural_proj_dim(k);
  if (dim < 2 * g) {
    return excluded(Rule::ClassicalProjDim, {{"proj_dim", dec(dim)}, {"two_g", dec(2 * g)}},
                    "natural projective dimension " + dec(dim) + " < " + dec(2 * g));
  }
  if (auto deg = min_perm_degree(k, g)) {
    const BigInt index = mcg_min_index(g);
    if (l.family == LieFamily::D2) {
      return excluded(Rule::ClassicalPermDegree, {{"perm_degree", dec(*deg)}, {"min_index", dec(index)}},
                      "has a subgroup of index " + dec(*deg) + " < " + dec(index));
    }
    if (l.family == LieFamily::D) {
      return excluded(Rule::ClassicalUniqueness, {{"perm_degree", dec(*deg)}, {"min_index", dec(index)}},
                      "has a subgroup of index exactly " + dec(index) + " and is not Sp_2g(2)");
    }
    if (l.family == LieFamily::C) {
      Verdict v;
      v.kind = Verdict::Kind::Survivor;
      v.witness = {{"perm_degree", dec(*deg)}, {"min_index", dec(index)}};
      v.reason = "Sp_2g(2), the expected smallest quotient";
      return v;
    }
  }
  return unresolved({{"proj_dim", dec(dim)}, {"two_g", dec(2 * g)}},
                    "classical group of projective dimension >= 2g other than C_g(2), D_g(2), 2D_g(2)");
}

Verdict classify_exceptional(LieFamily f, unsigned rank, const GroupId& k, unsigned g) {
  if (levi_excluded(f)) {
    return excluded(Rule::ExcDThree, {{"family", std::string(family_token(f))}},
                    "every Levi factor has simple factors of type A only; homomorphisms are trivial");
  }
  if (rank < g && !g3_carve_out(f, g)) {
    return excluded(Rule::ExcRank, {{"rank", dec(rank)}, {"genus", dec(g)}}, "rank " + dec(rank) + " < " + dec(g));
  }
  const GroupId smallest = smallest_member(f);
  const BigInt s = order(smallest);
  const BigInt sp = sp_order(g);
  const BigInt ord = order(k);
  std::vector<Witness> w{{"smallest_member", smallest.name()},
                         {"smallest_order", dec(s)},
                         {"order", dec(ord)},
                         {"sp_order", dec(sp)}};
  if (s > sp && ord >= s) {
    return excluded(Rule::ExcOrderIneq, std::move(w), "every simple member of the family is larger than |Sp_2g(2)|");
  }
  return unresolved(std::move(w), "order comparison fails: |" + k.name() + "| = " + dec(ord) +
                                      " <= |Sp_2g(2)| = " + dec(sp) + " and rank " + dec(rank) + " >= " + dec(g));
}

FactorCheck check_factor(const GroupId& factor, unsigned h, const BigInt& parent_order, const SporadicTable& table) {
  FactorCheck fc{factor, canonicalize(factor), false, "", {}};
  const GroupId& c = fc.canonical;
  if (c.is_alternating()) {
    const BigInt index = mcg_min_index(h);
    const auto n = c.as_alternating().n;
    fc.excluded = BigInt(static_cast<unsigned long>(n)) < index;
    fc.witness = {{"degree", dec(n)}, {"min_index", dec(index)}};
    fc.reason = "alternating of degree " + dec(n) + (fc.excluded ? " < " : " >= ") + dec(index);
  } else if (c.is_lie()) {
    const Lie& l = c.as_lie();
    if (is_classical(l.family)) {
      const unsigned dim = natural_proj_dim(c);
      if (l.rank < h) {
        fc.excluded = true;
        fc.witness = {{"rank", dec(l.rank)}, {"genus", dec(h)}};
        fc.reason = "rank " + dec(l.rank) + " < " + dec(h);
      } else {
        fc.excluded = dim < 2 * h;
        fc.witness = {{"proj_dim", dec(dim)}, {"two_g", dec(2 * h)}};
        fc.reason = "natural projective dimension " + dec(dim) + (fc.excluded ? " < " : " >= ") + dec(2 * h);
      }
    } else {
      fc.excluded = levi_excluded(l.family) || (l.rank < h && !g3_carve_out(l.family, h));
      fc.witness = {{"rank", dec(l.rank)}, {"genus", dec(h)}};
      fc.reason = "exceptional of rank " + dec(l.rank) + (fc.excluded ? " < " : " >= ") + dec(h);
    }
  } else if (c.is_sporadic()) {
    const auto* rec = table.find(c.as_sporadic().name);
    const BigInt sp = sp_order(h);
    if (!rec) {
      fc.reason = "not in the sporadic table";
    } else {
      fc.excluded = rec->order < sp && rec->order < parent_order;
      fc.witness = {{"order", dec(rec->order)}, {"sp_order", dec(sp)}};
      fc.reason = "order " + dec(rec->order) + (rec->order < sp ? " < " : " >= ") + "|Sp_" + dec(2 * h) + "(2)|";
    }
  } else {
    fc.reason = "unsupported factor";
  }
  return fc;
}

Verdict classify_sporadic(const std::string& name, const SporadicTable& table) {
  const auto* rec = table.find(name);
  if (!rec) throw UnknownGroup("sporadic " + name + " is not in the table");
  const unsigned gk = g_of_order(rec->order);
  if (sporadic_rank_excluded(*rec)) {
    return excluded(Rule::SporadicRank, {{"g_K", dec(gk)}},
                    "3-rank and 4-rank below g(K) = " + dec(gk));
  }
  if (*rec->g_k != gk) {
    return unresolved({{"g_K_listed", dec(*rec->g_k)}, {"g_K_computed", dec(gk)}}, "g(K) column disagrees with orders");
  }
  const unsigned h = gk - 1;
  Verdict v;
  v.witness = {{"g_K", dec(gk)}, {"factor_genus", dec(h)}};
  bool all = true;
  for (const auto& f : *rec->centralizer_factors) {
    v.factors.push_back(check_factor(f, h, rec->order, table));
    all = all && v.factors.back().excluded;
  }
  v.rule = Rule::SporadicCentralizer;
  if (all) {
    v.kind = Verdict::Kind::Excluded;
    v.reason = "every centraliser factor is excluded at genus " + dec(h);
  } else {
    v.kind = Verdict::Kind::Unresolved;
    v.rule.reset();
    v.reason = "some centraliser factor survives at genus " + dec(h);
  }
  return v;
}

}  // namespace

std::string_view rule_id(Rule r) {
  switch (r) {
    case Rule::AltPermDegree:
      return "ALT_PERM_DEGREE";
    case Rule::AltOrderChain:
      return "ALT_ORDER_CHAIN";
    case Rule::ClassicalProjDim:
      return "CLASSICAL_PROJDIM";
    case Rule::ClassicalPermDegree:
      return "CLASSICAL_PERMDEGREE";
    case Rule::ClassicalUniqueness:
      return "CLASSICAL_UNIQUENESS";
    case Rule::ExcRank:
      return "EXC_RANK";
    case Rule::ExcDThree:
      return "EXC_DTHREE";
    case Rule::ExcOrderIneq:
      return "EXC_ORDER_INEQ";
    case Rule::SporadicRank:
      return "SPORADIC_RANK";
    case Rule::SporadicCentralizer:
      return "SPORADIC_CENTRALIZER";
  }
  return "?";
}

std::string_view rule_citation(Rule r) {
  switch (r) {
    case Rule::AltPermDegree:
      return "Berrick-Gebhardt-Paris: the mapping class group has no proper subgroup of index below "
             "2^(g-1)(2^g-1), so it cannot act non-trivially on fewer points";
    case Rule::AltOrderChain:
      return "alternating chain: Alt on 2^(g-1)(2^g-1) letters is already larger than Sp_2g(2)";
    case Rule::ClassicalProjDim:
      return "representation bound: every projective representation of the mapping class group in "
             "dimension below 2g is trivial";
    case Rule::ClassicalPermDegree:
      return "Kleidman-Liebeck: 2D_g(2) has a subgroup of index 2^(g-1)(2^g-1)-1, below the minimal index";
    case Rule::ClassicalUniqueness:
      return "uniqueness of the index 2^(g-1)(2^g-1) subgroup: D_g(2) would have to factor through Sp_2g(2)";
    case Rule::ExcRank:
      return "groups of Lie type of rank less than g are not quotients (G_2 and 2G_2 excepted at g = 3)";
    case Rule::ExcDThree:
      return "3D4 and 2F4 (and the Tits group): simple factors of Levi factors are too small, so every "
             "homomorphism is trivial";
    case Rule::ExcOrderIneq:
      return "direct order comparison: the smallest simple member of the family exceeds |Sp_2g(2)|";
    case Rule::SporadicRank:
      return "3-rank and 4-rank below g(K) (rank data from the literature and GAP, recorded here as absence "
             "from the centraliser table; the source warns that table may over-include)";
    case Rule::SporadicCentralizer:
      return "centraliser argument: every simple factor of a centraliser of an element of order 2 or 3 is "
             "excluded at genus g(K)-1";
  }
  return "";
}

std::string_view verdict_kind_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Excluded:
      return "excluded";
    case Verdict::Kind::Survivor:
      return "survivor";
    case Verdict::Kind::Unresolved:
      return "unresolved";
  }
  return "?";
}

Verdict classify(const GroupId& input, unsigned g, const SporadicTable& table) {
  if (g < 3) throw GenusTooSmall("the pipeline starts at genus 3");
  if (input.is_cyclic()) throw PreconditionViolated(input.name() + " is abelian");
  if (!is_simple(input)) throw PreconditionViolated(input.name() + " is not simple");
  const GroupId k = canonicalize(input);
  const BigInt sp = sp_order(g);
  if (order(k) > sp) throw OutOfScope(k.name() + " is larger than |Sp_2g(2)| at g = " + std::to_string(g));

  if (k.is_alternating()) return classify_alternating(k.as_alternating().n, g);
  if (k.is_tits()) {
    return excluded(Rule::ExcDThree, {{"family", "Tits"}}, "index-2 subgroup of 2F4(2); same Levi-factor argument");
  }
  if (k.is_sporadic()) return classify_sporadic(k.as_sporadic().name, table);
  const Lie& l = k.as_lie();
  if (is_classical(l.family)) return classify_classical(l, g);
  return classify_exceptional(l.family, l.rank, k, g);
}

Verdict classify_series(const LieSeries& s, unsigned g) {
  if (is_classical(s.family)) {
    const unsigned dim = natural_proj_dim(GroupId::lie(s.family, s.rank, s.family == LieFamily::B ? 3 : 2));
    if (dim < 2 * g) {
      return excluded(Rule::ClassicalProjDim, {{"proj_dim", dec(dim)}, {"two_g", dec(2 * g)}},
                      "natural projective dimension " + dec(dim) + " < " + dec(2 * g) + " for every q");
    }
    return unresolved({{"proj_dim", dec(dim)}}, "series of classical groups with projective dimension >= 2g");
  }
  if (levi_excluded(s.family)) {
    return excluded(Rule::ExcDThree, {{"family", std::string(family_token(s.family))}}, "Levi-factor argument");
  }
  if (s.rank < g && !g3_carve_out(s.family, g)) {
    return excluded(Rule::ExcRank, {{"rank", dec(s.rank)}, {"genus", dec(g)}},
                    "rank " + dec(s.rank) + " < " + dec(g) + " for every q");
  }
  return unresolved({{"rank", dec(s.rank)}}, "series of exceptional groups not covered by a uniform rule");
}

bool ExclusionReport::theorem_holds() const {
  const std::string expected = GroupId::lie(LieFamily::C, genus, 2).name();
  return survivors.size() == 1 && survivors.front() == expected;
}

ExclusionReport run_pipeline(unsigned g, std::uint64_t explicit_q_limit, const SporadicTable& table) {
  if (g < 3) throw GenusTooSmall("the pipeline starts at genus 3");
  ExclusionReport report;
  report.genus = g;
  report.bound = sp_order(g);
  const EnumerationResult groups = enumerate_simple_below(report.bound, explicit_q_limit);
  for (const auto& e : groups.groups) {
    report.entries.push_back({e.group, e.order, classify(e.group, g, table)});
    if (!report.entries.back().verdict.excluded()) report.survivors.push_back(e.group.name());
  }
  for (const auto& s : groups.series) {
    report.series.push_back({s, classify_series(s, g)});
    if (!report.series.back().verdict.excluded()) report.survivors.push_back(s.name());
  }
  return report;
}

}  // namespace spq
