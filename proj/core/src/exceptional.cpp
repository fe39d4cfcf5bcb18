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

#include "spq/exceptional.hpp"

#include "spq/catalog.hpp"
#include "spq/errors.hpp"

namespace spq {

namespace {

struct Side {
  std::string name;
  BigInt value;
};

Side lie(LieFamily f, std::uint64_t q, Version v = Version::Adjoint) {
  const GroupId g = GroupId::lie(f, q, v);
  return {"|" + g.name() + "|", order(g)};
}

Side sp(unsigned g) { return {"|Sp_" + std::to_string(2 * g) + "(2)|", sp_order(g)}; }

ProofStep greater(const std::string& tag, const Side& a, const Side& b, bool informational = false) {
  ProofStep s{tag + ": " + a.name + " > " + b.name, ">", to_decimal(a.value), to_decimal(b.value), a.value > b.value,
              "", informational};
  return s;
}

}  // namespace

ProofTrace verify_exceptional_inequalities() {
  ProofTrace t;
  t.title = "exceptional groups against the symplectic groups";

  const Side g2_3 = lie(LieFamily::G2, 3);
  t.steps.push_back(greater("G2 family", lie(LieFamily::G2_2, 27), g2_3));
  t.steps.push_back(greater("G2 family", g2_3, sp(3)));
  t.steps.push_back(greater("F4 family", lie(LieFamily::F4, 2), sp(4)));
  const Side e6_2 = lie(LieFamily::E6_2, 2);
  t.steps.push_back(greater("E6 family", lie(LieFamily::E6, 2), e6_2));
  t.steps.back().note = "adjoint orders";
  t.steps.push_back(greater("E6 family", e6_2, sp(6)));
  t.steps.back().note = "adjoint order; the centre of the universal version has order 3";
  t.steps.push_back(greater("E7 family", lie(LieFamily::E7, 2), sp(7)));
  t.steps.push_back(greater("E8 family", lie(LieFamily::E8, 2), sp(8)));

  t.steps.push_back(greater("context", lie(LieFamily::D4_3, 2), sp(3), true));
  t.steps.back().note = "3D4 is excluded by the Levi-factor argument, not by order";
  t.steps.push_back(greater("context", lie(LieFamily::F4_2, 2), sp(3), true));
  t.steps.back().note = "2F4(2) is not simple; its index-2 subgroup is the Tits group";
  t.steps.push_back(greater("context", lie(LieFamily::E6_2, 2, Version::Universal), sp(6), true));
  t.steps.back().note = "universal version of 2E6(2)";
  return t;
}

ProofTrace require_exceptional_inequalities() {
  ProofTrace t = verify_exceptional_inequalities();
  if (const auto i = t.first_failure(); i < t.steps.size()) throw InequalityFailed(t.steps[i].label);
  return t;
}

}  // namespace spq
