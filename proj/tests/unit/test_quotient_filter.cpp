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

#include <gtest/gtest.h>

#include <set>

#include "spq/alt_chain.hpp"
#include "spq/catalog.hpp"
#include "spq/errors.hpp"
#include "spq/exceptional.hpp"
#include "spq/quotient_filter.hpp"

using namespace spq;

namespace {

std::string witness(const Verdict& v, const std::string& key) {
  for (const auto& w : v.witness)
    if (w.key == key) return w.value;
  return "";
}

}  // namespace

TEST(Classify, SpecExamples) {
  auto v = classify(GroupId::sporadic("M11"), 3);
  EXPECT_TRUE(v.excluded());
  EXPECT_EQ(v.rule, Rule::SporadicRank);

  v = classify(GroupId::lie(LieFamily::D2, 4, 2), 4);
  EXPECT_EQ(v.rule, Rule::ClassicalPermDegree);
  EXPECT_EQ(witness(v, "perm_degree"), "119");
  EXPECT_EQ(witness(v, "min_index"), "120");

  v = classify(GroupId::lie(LieFamily::C, 3, 2), 3);
  EXPECT_EQ(v.kind, Verdict::Kind::Survivor);

  v = classify(GroupId::sporadic("Fi22"), 5);
  EXPECT_EQ(v.rule, Rule::SporadicCentralizer);
  ASSERT_EQ(v.factors.size(), 3u);
  std::set<std::string> names;
  for (const auto& f : v.factors) {
    EXPECT_TRUE(f.excluded) << f.factor.name() << ": " << f.reason;
    names.insert(f.factor.name());
  }
  EXPECT_EQ(names, (std::set<std::string>{"2A_3(3)", "2A_5(2)", "2D_3(2)"}));
  EXPECT_EQ(witness(v, "factor_genus"), "4");
}

TEST(Classify, Monster) {
  const auto v = classify(GroupId::sporadic("M"), 10);
  EXPECT_EQ(v.rule, Rule::SporadicCentralizer);
  std::set<std::string> names;
  for (const auto& f : v.factors) {
    EXPECT_TRUE(f.excluded) << f.factor.name();
    names.insert(f.factor.name());
  }
  EXPECT_EQ(names, (std::set<std::string>{"B", "Co1", "Fi24'", "Suz", "Th"}));
}

TEST(Classify, OtherRules) {
  EXPECT_EQ(classify(GroupId::alternating(9), 3).rule, Rule::AltPermDegree);
  EXPECT_EQ(classify(GroupId::lie(LieFamily::D, 4, 2), 4).rule, Rule::ClassicalUniqueness);
  EXPECT_EQ(classify(GroupId::lie(LieFamily::A, 2, 3), 3).rule, Rule::ClassicalProjDim);
  EXPECT_EQ(classify(GroupId::lie(LieFamily::D4_3, 2), 4).rule, Rule::ExcDThree);
  EXPECT_EQ(classify(GroupId::tits(), 4).rule, Rule::ExcDThree);
  EXPECT_EQ(classify(GroupId::lie(LieFamily::G2, 3), 4).rule, Rule::ExcRank);
  EXPECT_EQ(classify(GroupId::lie(LieFamily::F4, 2), 5).rule, Rule::ExcRank);
  EXPECT_EQ(classify(GroupId::lie(LieFamily::B2_2, 8), 3).rule, Rule::ExcRank);
  // Equal order, non-isomorphic: both dealt with by their own rule.
  EXPECT_EQ(classify(GroupId::lie(LieFamily::A, 2, 4), 3).rule, Rule::ClassicalProjDim);
  EXPECT_EQ(classify(GroupId::alternating(8), 3).rule, Rule::AltPermDegree);
}

TEST(Classify, Preconditions) {
  EXPECT_THROW(classify(GroupId::cyclic(5), 3), PreconditionViolated);
  EXPECT_THROW(classify(GroupId::lie(LieFamily::A, 1, 2), 3), PreconditionViolated);
  EXPECT_THROW(classify(GroupId::sporadic("M23"), 3), OutOfScope);
  EXPECT_THROW(classify(GroupId::sporadic("M11"), 2), GenusTooSmall);
  // Aliases are canonicalised before classification.
  EXPECT_EQ(classify(GroupId::lie(LieFamily::A, 3, 2), 3).rule, Rule::AltPermDegree);
}

TEST(Classify, CitationsAndIdsArePresent) {
  for (Rule r : {Rule::AltPermDegree, Rule::AltOrderChain, Rule::ClassicalProjDim, Rule::ClassicalPermDegree,
                 Rule::ClassicalUniqueness, Rule::ExcRank, Rule::ExcDThree, Rule::ExcOrderIneq, Rule::SporadicRank,
                 Rule::SporadicCentralizer}) {
    EXPECT_FALSE(rule_id(r).empty());
    EXPECT_FALSE(rule_citation(r).empty());
  }
}

TEST(Pipeline, SmallGenera) {
  for (unsigned g : {3u, 4u, 5u}) {
    const auto r = run_pipeline(g);
    EXPECT_TRUE(r.theorem_holds()) << g;
    EXPECT_EQ(r.survivors, std::vector<std::string>{GroupId::lie(LieFamily::C, g, 2).name()});
  }
}

TEST(Pipeline, EveryExclusionHasAWitness) {
  for (unsigned g = 3; g <= 10; ++g) {
    const auto r = run_pipeline(g);
    for (const auto& e : r.entries) {
      if (!e.verdict.excluded()) continue;
      EXPECT_TRUE(e.verdict.rule.has_value()) << e.group.name();
      EXPECT_FALSE(e.verdict.witness.empty()) << e.group.name();
      EXPECT_LE(e.order, r.bound);
    }
    for (const auto& s : r.series) EXPECT_FALSE(s.verdict.witness.empty());
  }
}

// With adjoint orders, |2E6(2)| is below |Sp_12(2)| and rank 6 is not below
// g = 6, so no rule disposes of it; only the universal order is larger.
TEST(Pipeline, Genus6Leaves2E6) {
  const auto r = run_pipeline(6);
  EXPECT_EQ(r.survivors, (std::vector<std::string>{"2E_6(2)", "C_6(2)"}));
  EXPECT_FALSE(r.theorem_holds());
  EXPECT_LT(order(GroupId::lie(LieFamily::E6_2, 2)), sp_order(6));
  EXPECT_GT(order(GroupId::lie(LieFamily::E6_2, 2, Version::Universal)), sp_order(6));
  for (unsigned g : {7u, 8u, 9u, 10u}) EXPECT_TRUE(run_pipeline(g).theorem_holds()) << g;
}

TEST(AltChain, AllStepsHold) {
  for (unsigned g = 3; g <= 12; ++g) {
    const auto t = verify_alt_chain(g);
    EXPECT_TRUE(t.ok()) << g;
    EXPECT_NO_THROW(require_alt_chain(g));
  }
  for (unsigned g = 3; g <= 6; ++g) {
    const auto t = verify_alt_chain(g, {.exact_factorial = true});
    EXPECT_TRUE(t.ok()) << g;
    EXPECT_EQ(t.steps.back().note, "full factorial");
  }
  EXPECT_THROW(verify_alt_chain(2), GenusTooSmall);
}

TEST(AltChain, PrintedExponentVariantIsInformational) {
  const auto t = verify_alt_chain(3);
  bool saw_info = false;
  for (const auto& s : t.steps) saw_info = saw_info || s.informational;
  EXPECT_TRUE(saw_info);
}

TEST(Exceptional, OnlyThe2E6StepFails) {
  const auto t = verify_exceptional_inequalities();
  std::size_t failures = 0;
  for (const auto& s : t.steps) {
    if (s.informational) {
      EXPECT_TRUE(s.ok) << s.label;
      continue;
    }
    if (!s.ok) {
      ++failures;
      EXPECT_NE(s.label.find("2E_6(2)"), std::string::npos) << s.label;
    }
  }
  EXPECT_EQ(failures, 1u);
  EXPECT_THROW(require_exceptional_inequalities(), InequalityFailed);
}
