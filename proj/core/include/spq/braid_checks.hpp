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

// Braid relation checks and the small matrix identities used in the
// low-dimensional representation argument.

#include <cstdint>
#include <vector>

#include "spq/ff_matrix.hpp"

namespace spq {

/// PQP == QPQ exactly.
bool braid_check(const FFMatrix& p, const FFMatrix& q);

/// P(d) = [[0,d,0],[0,0,1/d],[1,0,0]].
FFMatrix cyclic_lift(const FieldPtr& f, FiniteField::Elem d);

struct TripleProductFailure {
  FiniteField::Elem delta;
  FiniteField::Elem epsilon;
  bool pqp_ok;
  bool qpq_ok;
};

/// For every delta, epsilon in F^x: P(d)P(e)P(d) = diag(d/e, 1, e/d) and
/// P(e)P(d)P(e) = diag(e/d, 1, d/e).
struct TripleProductReport {
  std::uint32_t q = 0;
  std::size_t pairs = 0;
  std::size_t braid_pairs = 0;  // pairs where the braid relation holds on the nose
  std::vector<TripleProductFailure> failures;
  bool ok() const { return failures.empty(); }
};

TripleProductReport verify_triple_product(const FieldPtr& f);

/// The 2x2 lift [[0,-w],[1,0]]; it braids with itself trivially.
FFMatrix swap_lift(const FieldPtr& f, FiniteField::Elem w);

/// Two-dimensional swap case: for each w with w^2 = 1, T = diag(w, 1) and
/// P = [[0,-w],[1,0]] should satisfy det P = w, T P T^-1 P^-1 = w I and the
/// braid relation with Q = P. In characteristic 2 the only such
/// w is 1, so the swap never happens; `degenerate` records that.
struct GammaRow {
  FiniteField::Elem omega = 0;
  bool det_ok = false;
  bool commutator_ok = false;
  bool braid_ok = false;
  bool ok() const { return det_ok && commutator_ok && braid_ok; }
};

struct GammaReport {
  std::uint32_t q = 0;
  std::uint32_t characteristic = 0;
  std::vector<GammaRow> rows;  // every w with w^2 = 1
  bool degenerate = false;     // no w != 1
  bool ok() const {
    for (const auto& r : rows) {
      if (!r.ok()) return false;
    }
    return !rows.empty();
  }
};

GammaReport verify_swap_case(const FieldPtr& f);

/// One diagonal (1,1,mu) arrangement: `mu_position` says where mu sits.
struct GoldenRow {
  FiniteField::Elem mu = 0;
  unsigned mu_position = 0;
  std::uint64_t pairs = 0;           // ordered pairs (P, Q) scanned
  std::uint64_t unequal_braids = 0;  // P != Q with PQP = QPQ
};

struct GoldenMuSummary {
  FiniteField::Elem mu = 0;
  bool unequal_braid_exists = false;
  bool stated_root = false;     // mu^2 - mu - 1 = 0
  bool corrected_root = false;  // mu^2 - mu + 1 = 0
};

struct GoldenScanReport {
  std::uint32_t q = 0;
  std::vector<GoldenRow> rows;
  std::vector<GoldenMuSummary> summary;

  /// mus where "unequal braid pair exists" disagrees with mu^2 - mu - 1 = 0.
  std::vector<FiniteField::Elem> stated_counterexamples() const;
  /// The same against mu^2 - mu + 1 = 0.
  std::vector<FiniteField::Elem> corrected_counterexamples() const;
};

/// Every pair of upper-triangular 3x3 matrices over F whose diagonal is an
/// arrangement of (1, 1, mu), for every unit mu != 1. RangeError when |F| > 9.
GoldenScanReport golden_braid_scan(const FieldPtr& f);

}  // namespace spq
