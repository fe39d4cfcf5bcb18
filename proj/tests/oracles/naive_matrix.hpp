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

// Brute-force linear algebra over GF(p) and GF(4) on plain ints: cofactor
// determinants, null spaces by counting, centralizers by enumerating every
// matrix. Slow on purpose and independent of the library's field code.

#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

struct SmallField {
  int q;
  std::function<int(int, int)> add;
  std::function<int(int, int)> mul;
  int neg(int a) const {
    for (int b = 0; b < q; ++b)
      if (add(a, b) == 0) return b;
    return -1;
  }
};

inline SmallField prime_field(int p) {
  return {p, [p](int a, int b) { return (a + b) % p; }, [p](int a, int b) { return (a * b) % p; }};
}

// GF(4) = GF(2)[x]/(x^2 + x + 1), element c0 + 2 c1.
inline SmallField gf4() {
  auto mul = [](int a, int b) {
    int r = 0;
    for (int i = 0; i < 2; ++i)
      if (b >> i & 1) r ^= a << i;
    if (r & 4) r ^= 0b111;
    return r;
  };
  return {4, [](int a, int b) { return a ^ b; }, mul};
}

using IMat = std::vector<std::vector<int>>;
using FPoly = std::vector<int>;  // low to high over the field

inline FPoly padd(const SmallField& F, FPoly a, const FPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.add(a[i], b[i]);
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline FPoly pmul(const SmallField& F, const FPoly& a, const FPoly& b) {
  if (a.empty() || b.empty()) return {};
  FPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// det of a matrix of polynomials by expansion along the first row.
inline FPoly poly_det(const SmallField& F, const std::vector<std::vector<FPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  FPoly acc;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<FPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<FPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    FPoly term = pmul(F, m[0][c], poly_det(F, minor));
    if (c % 2 == 1)
      for (auto& v : term) v = F.neg(v);
    acc = padd(F, acc, term);
  }
  return acc;
}

// det(tI - X) by cofactor expansion.
inline FPoly char_poly(const SmallField& F, const IMat& x) {
  const std::size_t n = x.size();
  std::vector<std::vector<FPoly>> m(n, std::vector<FPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      FPoly e{F.neg(x[i][j])};
      if (i == j) e = {F.neg(x[i][j]), 1};
      while (!e.empty() && e.back() == 0) e.pop_back();
      m[i][j] = e;
    }
  return poly_det(F, m);
}

inline int det(const SmallField& F, const IMat& x) {
  std::vector<std::vector<FPoly>> m(x.size(), std::vector<FPoly>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) m[i][j] = x[i][j] ? FPoly{x[i][j]} : FPoly{};
  const FPoly d = poly_det(F, m);
  return d.empty() ? 0 : d[0];
}

inline IMat matmul(const SmallField& F, const IMat& a, const IMat& b) {
  const std::size_t n = a.size();
  IMat out(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i][j] = F.add(out[i][j], F.mul(a[i][k], b[k][j]));
  return out;
}

inline IMat decode(int q, std::size_t n, std::uint64_t code) {
  IMat m(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = static_cast<int>(code % q);
      code /= q;
    }
  return m;
}

// Number of v with A v = 0.
inline std::uint64_t kernel_size(const SmallField& F, const IMat& a) {
  const std::size_t n = a.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= F.q;
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<int> v(n);
    auto c = code;
    for (auto& x : v) {
      x = static_cast<int>(c % F.q);
      c /= F.q;
    }
    bool zero = true;
    for (std::size_t i = 0; i < n && zero; ++i) {
      int acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc = F.add(acc, F.mul(a[i][j], v[j]));
      zero = acc == 0;
    }
    if (zero) ++count;
  }
  return count;
}

inline std::size_t kernel_dim(const SmallField& F, const IMat& a) {
  std::size_t d = 0;
  for (auto s = kernel_size(F, a); s > 1; s /= F.q) ++d;
  return d;
}

// Every invertible Y with XY = YX, by enumerating all q^(n*n) matrices.
inline std::vector<IMat> centralizer(const SmallField& F, const IMat& x) {
  const std::size_t n = x.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) total *= F.q;
  std::vector<IMat> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    IMat y = decode(F.q, n, code);
    if (matmul(F, x, y) != matmul(F, y, x)) continue;
    if (det(F, y) == 0) continue;
    out.push_back(y);
  }
  return out;
}

}  // namespace oracle
