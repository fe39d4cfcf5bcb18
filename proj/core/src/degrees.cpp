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

#include "spq/degrees.hpp"

#include "spq/errors.hpp"

namespace spq {

unsigned natural_proj_dim(const GroupId& g) {
  if (!g.is_lie() || !is_classical(g.as_lie().family)) throw NotClassical(g.name() + " is not classical");
  const Lie& l = g.as_lie();
  switch (l.family) {
    case LieFamily::A:
    case LieFamily::A2:
      return l.rank + 1;
    case LieFamily::B:
      return 2 * l.rank + 1;
    default:
      return 2 * l.rank;
  }
}

BigInt mcg_min_index(unsigned g) {
  if (g < 3) throw GenusTooSmall("genus " + std::to_string(g) + " is below 3");
  return pow2(g - 1) * (pow2(g) - 1);
}

std::optional<BigInt> min_perm_degree(const GroupId& k, unsigned genus) {
  if (!k.is_lie() || genus < 3) return std::nullopt;
  const Lie& l = k.as_lie();
  if (l.rank != genus || l.q != 2 || l.version != Version::Adjoint) return std::nullopt;
  switch (l.family) {
    case LieFamily::C:
    case LieFamily::D:
      return mcg_min_index(genus);
    case LieFamily::D2:
      return mcg_min_index(genus) - 1;
    default:
      return std::nullopt;
  }
}

}  // namespace spq
