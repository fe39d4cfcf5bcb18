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

#include "spq/braid_checks.hpp"

#include <array>

#include "spq/errors.hpp"

namespace spq {

namespace {

using Elem = FiniteField::Elem;

// 3x3 products on raw arrays with full addition and multiplication tables;
// the golden scan over GF(9) does about 3.5e7 of them.
using M3 = std::array<std::uint8_t, 9>;

struct SmallTables {
  std::uint32_t q;
  std::vector<std::uint8_t> add, mul;
  explicit SmallTables(const FiniteField& F) : q(F.size()), add(q * q), mul(q * q) {
    for (Elem a = 0; a < q; ++a) {
      for (Elem b = 0; b < q; ++b) {
        add[a * q + b] = static_cast<std::uint8_t>(F.add(a, b));
        mul[a * q + b] = static_cast<std::uint8_t>(F.mul(a, b));
      }
    }
  }
  M3 mul3(const M3& a, const M3& b) const {
    M3 out{};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        std::uint8_t acc = 0;
        for (int k = 0; k < 3; ++k) acc = add[acc * q + mul[a[i * 3 + k] * q + b[k * 3 + j]]];
        out[i * 3 + j] = acc;
      }
    }
    return out;
  }
};

}  // namespace

bool braid_check(const FFMatrix& p, const FFMatrix& q) {
  if (p.n() != q.n() || p.field() != q.field()) throw InvalidParameters("braid check needs matrices of one shape");
  return p * q * p == q * p * q;
}

FFMatrix cyclic_lift(const FieldPtr& f, Elem d) {
  return FFMatrix(f, 3, {0, d, 0, 0, 0, f->inv(d), 1, 0, 0});
}

TripleProductReport verify_triple_product(const FieldPtr& f) {
  const auto& F = *f;
  TripleProductReport rep;
  rep.q = F.size();
  for (Elem d = 1; d < F.size(); ++d) {
    for (Elem e = 1; e < F.size(); ++e) {
      ++rep.pairs;
      const FFMatrix P = cyclic_lift(f, d);
      const FFMatrix Q = cyclic_lift(f, e);
      const FFMatrix pqp = P * Q * P;
      const FFMatrix qpq = Q * P * Q;
      const bool pqp_ok = pqp == FFMatrix::diagonal(f, {F.div(d, e), 1, F.div(e, d)});
      const bool qpq_ok = qpq == FFMatrix::diagonal(f, {F.div(e, d), 1, F.div(d, e)});
      if (pqp == qpq) ++rep.braid_pairs;
      if (!pqp_ok || !qpq_ok) rep.failures.push_back({d, e, pqp_ok, qpq_ok});
    }
  }
  return rep;
}

FFMatrix swap_lift(const FieldPtr& f, Elem w) { return FFMatrix(f, 2, {0, f->neg(w), 1, 0}); }

GammaReport verify_swap_case(const FieldPtr& f) {
  const auto& F = *f;
  GammaReport rep;
  rep.q = F.size();
  rep.characteristic = F.characteristic();
  for (Elem w = 1; w < F.size(); ++w) {
    if (F.mul(w, w) != 1) continue;
    GammaRow row;
    row.omega = w;
    const FFMatrix P = swap_lift(f, w);
    const FFMatrix T = FFMatrix::diagonal(f, {w, 1});
    row.det_ok = P.det() == w;
    row.commutator_ok = T * P * T.inverse() * P.inverse() == FFMatrix::scalar(f, 2, w);
    row.braid_ok = braid_check(P, P);
    rep.rows.push_back(row);
  }
  rep.degenerate = rep.rows.size() == 1;
  return rep;
}

std::vector<Elem> GoldenScanReport::stated_counterexamples() const {
  std::vector<Elem> out;
  for (const auto& s : summary) {
    if (s.unequal_braid_exists != s.stated_root) out.push_back(s.mu);
  }
  return out;
}

std::vector<Elem> GoldenScanReport::corrected_counterexamples() const {
  std::vector<Elem> out;
  for (const auto& s : summary) {
    if (s.unequal_braid_exists != s.corrected_root) out.push_back(s.mu);
  }
  return out;
}

GoldenScanReport golden_braid_scan(const FieldPtr& f) {
  const auto& F = *f;
  if (F.size() > 9) throw RangeError("golden braid scan needs a field of size <= 9");
  GoldenScanReport rep;
  rep.q = F.size();
  const std::uint32_t q = F.size();
  const SmallTables T(F);

  for (Elem mu = 2; mu < q; ++mu) {
    GoldenMuSummary s;
    s.mu = mu;
    const Elem mu2 = F.mul(mu, mu);
    s.stated_root = F.sub(F.sub(mu2, mu), 1) == 0;
    s.corrected_root = F.add(F.sub(mu2, mu), 1) == 0;

    for (unsigned pos = 0; pos < 3; ++pos) {
      std::uint8_t diag[3] = {1, 1, 1};
      diag[pos] = static_cast<std::uint8_t>(mu);
      std::vector<M3> mats;
      mats.reserve(std::size_t{q} * q * q);
      for (std::uint8_t a = 0; a < q; ++a) {
        for (std::uint8_t b = 0; b < q; ++b) {
          for (std::uint8_t c = 0; c < q; ++c) mats.push_back(M3{diag[0], a, b, 0, diag[1], c, 0, 0, diag[2]});
        }
      }
      GoldenRow row;
      row.mu = mu;
      row.mu_position = pos;
      for (std::size_t i = 0; i < mats.size(); ++i) {
        for (std::size_t j = 0; j < mats.size(); ++j) {
          ++row.pairs;
          if (i == j) continue;
          const M3 pq = T.mul3(mats[i], mats[j]);
          const M3 qp = T.mul3(mats[j], mats[i]);
          if (T.mul3(pq, mats[i]) == T.mul3(qp, mats[j])) ++row.unequal_braids;
        }
      }
      if (row.unequal_braids) s.unequal_braid_exists = true;
      rep.rows.push_back(row);
    }
    rep.summary.push_back(s);
  }
  return rep;
}

}  // namespace spq
