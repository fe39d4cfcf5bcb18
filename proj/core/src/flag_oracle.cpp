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

#include "spq/flag_oracle.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "spq/errors.hpp"

namespace spq {

namespace {

using Elem = FiniteField::Elem;

constexpr std::size_t kMaxReportedViolations = 8;

const Embedding& cached_embedding(const FieldPtr& small, const FieldPtr& big) {
  static std::mutex mu;
  static std::map<std::pair<const FiniteField*, const FiniteField*>, std::unique_ptr<Embedding>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{small.get(), big.get()}];
  if (!slot) slot = std::make_unique<Embedding>(small, big);
  return *slot;
}

FFMatrix minus_scalar(const FFMatrix& x, Elem lambda) {
  return x - FFMatrix::scalar(x.field(), x.n(), lambda);
}

Subspace kernel_space(const FFMatrix& a) { return Subspace(a.field(), a.n(), a.kernel()); }

}  // namespace

std::pair<std::uint32_t, unsigned> split_prime_power(std::uint32_t q) {
  if (q < 2) throw InvalidParameters(std::to_string(q) + " is not a prime power");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  unsigned k = 0;
  std::uint32_t r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) throw InvalidParameters(std::to_string(q) + " is not a prime power");
  return {p, k};
}

FFPoly char_poly(const FFMatrix& x) {
  const auto& F = *x.field();
  const std::size_t n = x.n();
  FFMatrix h = x;

  // Similarity transform to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && h.at(piv, m - 1) == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h.at(piv, j), h.at(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h.at(i, piv), h.at(i, m));
    }
    const Elem inv = F.inv(h.at(m, m - 1));
    for (std::size_t i = m + 1; i < n; ++i) {
      const Elem u = F.mul(h.at(i, m - 1), inv);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h.at(i, j) = F.sub(h.at(i, j), F.mul(u, h.at(m, j)));
      for (std::size_t r = 0; r < n; ++r) h.at(r, m) = F.add(h.at(r, m), F.mul(u, h.at(r, i)));
    }
  }

  // p_k = charpoly of the leading k x k block:
  // p_k = (t - h_kk) p_{k-1} - sum_{i=1}^{k-1} h_{k-i,k} (prod_{j=k-i+1}^{k} h_{j,j-1}) p_{k-i-1}
  auto H = [&](std::size_t i, std::size_t j) { return h.at(i - 1, j - 1); };  // 1-based
  std::vector<FFPoly> p(n + 1, FFPoly{x.field(), {}});
  p[0].c = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    FFPoly lin{x.field(), {F.neg(H(k, k)), 1}};
    FFPoly acc = lin * p[k - 1];
    Elem prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod = F.mul(prod, H(k - i + 1, k - i));
      const Elem coef = F.mul(H(k - i, k), prod);
      if (coef == 0) continue;
      acc = acc - FFPoly{x.field(), {coef}} * p[k - i - 1];
    }
    p[k] = std::move(acc);
  }
  return p[n];
}

EigenData eigen_data(const FFMatrix& x) {
  const FieldPtr base = x.field();
  const FFPoly chi = char_poly(x);
  const std::size_t n = x.n();
  for (unsigned m = 1;; ++m) {
    // Landau's function bounds the splitting degree; 30 covers n <= 10.
    if (m > 30) throw Error("internal: characteristic polynomial did not split");
    FieldPtr big = FiniteField::get(base->characteristic(), base->degree() * m);
    const Embedding& e = cached_embedding(base, big);
    FFPoly rest = chi.embed(e);
    std::vector<std::pair<Elem, unsigned>> roots;
    unsigned total = 0;
    for (Elem r = 0; r < big->size() && total < n; ++r) {
      const unsigned mult = strip_root(rest, r);
      if (mult) {
        roots.emplace_back(r, mult);
        total += mult;
      }
    }
    if (total != n) continue;

    EigenData out{base, big, e, x.embed(e), {}};
    for (auto [lambda, mult] : roots) {
      Eigenvalue ev;
      ev.value = lambda;
      ev.algebraic_multiplicity = mult;
      const FFMatrix nmat = minus_scalar(out.x, lambda);
      FFMatrix power = nmat;
      for (unsigned j = 1; j <= mult; ++j) {
        ev.kernel_dims.push_back(n - power.rank());
        power = power * nmat;
      }
      ev.eigenspace_dim = ev.kernel_dims.front();
      out.eigenvalues.push_back(std::move(ev));
    }
    return out;
  }
}

const char* flag_case_name(FlagCase c) {
  switch (c) {
    case FlagCase::OneRootCyclic: return "one root, eigenspace a line";
    case FlagCase::OneRoot: return "one root";
    case FlagCase::TwoRootsLine: return "two roots, smaller eigenspace a line";
    case FlagCase::TwoRoots: return "two roots";
    case FlagCase::ThreeOrMore: return "three or more roots";
  }
  return "?";
}

std::size_t max_eigenspace_dim(const EigenData& d) {
  std::size_t best = 0;
  for (const auto& ev : d.eigenvalues) best = std::max(best, ev.eigenspace_dim);
  return best;
}

FlagResult invariant_flag(const FFMatrix& x) {
  const std::size_t n = x.n();
  if (n < 3) throw PreconditionViolated("the flag construction needs n >= 3");
  if (!x.invertible()) throw PreconditionViolated("matrix is not invertible");
  EigenData d = eigen_data(x);
  if (max_eigenspace_dim(d) + 1 >= n) {
    throw PreconditionViolated("matrix has an eigenspace of dimension " + std::to_string(max_eigenspace_dim(d)) +
                               " >= n-1");
  }
  const FFMatrix& xs = d.x;
  auto eigenspace = [&](Elem lambda) { return kernel_space(minus_scalar(xs, lambda)); };
  const auto& evs = d.eigenvalues;

  if (evs.size() == 1) {
    const Elem lambda = evs[0].value;
    Subspace e = eigenspace(lambda);
    if (e.dim() == 1) {
      const FFMatrix nm = minus_scalar(xs, lambda);
      Subspace k2 = kernel_space(nm * nm);
      return FlagResult{std::move(d), FlagCase::OneRootCyclic, Flag{std::move(e), std::move(k2)}};
    }
    Subspace copy = e;
    return FlagResult{std::move(d), FlagCase::OneRoot, Flag{std::move(e), std::move(copy)}};
  }

  if (evs.size() == 2) {
    // mu is the root with the smaller eigenspace; on a tie, the smaller encoding
    // (eigenvalues are already sorted that way).
    const bool first_is_mu = evs[0].eigenspace_dim <= evs[1].eigenspace_dim;
    const Elem mu = first_is_mu ? evs[0].value : evs[1].value;
    const Elem lambda = first_is_mu ? evs[1].value : evs[0].value;
    Subspace emu = eigenspace(mu);
    if (emu.dim() == 1) {
      Subspace sum = emu + eigenspace(lambda);
      return FlagResult{std::move(d), FlagCase::TwoRootsLine, Flag{std::move(emu), std::move(sum)}};
    }
    if (emu.dim() > n / 2) throw Error("internal: smaller eigenspace exceeds n/2");
    Subspace copy = emu;
    return FlagResult{std::move(d), FlagCase::TwoRoots, Flag{std::move(emu), std::move(copy)}};
  }

  Subspace e1 = eigenspace(evs[0].value);
  Subspace sum = e1 + eigenspace(evs[1].value);
  return FlagResult{std::move(d), FlagCase::ThreeOrMore, Flag{std::move(e1), std::move(sum)}};
}

bool flag_dimensions_ok(const Flag& f) {
  const std::size_t n = f.u.ambient();
  if (n < 3 || f.u.dim() == 0) return false;
  if (!f.u_prime.contains(f.u)) return false;
  const std::size_t a = f.u.dim();
  const std::size_t b = f.u_prime.dim() - f.u.dim();
  const std::size_t c = n - f.u_prime.dim();
  return a <= n - 2 && b <= n - 2 && c <= n - 2;
}

std::vector<FFMatrix> centralizer(const FFMatrix& x, std::uint64_t budget) {
  const auto& F = *x.field();
  const std::size_t n = x.n();
  const std::size_t nn = n * n;
  // Unknown Y_{kl} is variable k*n + l; row (i,j) of the system is (XY - YX)_{ij}.
  FFMatrix sys(x.field(), nn);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = i * n + j;
      for (std::size_t k = 0; k < n; ++k) {
        sys.at(row, k * n + j) = F.add(sys.at(row, k * n + j), x.at(i, k));
        sys.at(row, i * n + k) = F.sub(sys.at(row, i * n + k), x.at(k, j));
      }
    }
  }
  const auto basis = sys.kernel();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    count *= F.size();
    if (count > budget) {
      throw TooLarge("commutant has more than " + std::to_string(budget) + " elements");
    }
  }

  std::vector<FFMatrix> out;
  std::vector<Elem> coeff(basis.size(), 0);
  for (std::uint64_t c = 0; c < count; ++c) {
    std::uint64_t rest = c;
    for (auto& v : coeff) {
      v = static_cast<Elem>(rest % F.size());
      rest /= F.size();
    }
    std::vector<Elem> entries(nn, 0);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (coeff[b] == 0) continue;
      for (std::size_t t = 0; t < nn; ++t) entries[t] = F.add(entries[t], F.mul(coeff[b], basis[b][t]));
    }
    FFMatrix y(x.field(), n, std::move(entries));
    if (y.invertible()) out.push_back(std::move(y));
  }
  return out;
}

FlagScanReport flag_scan(std::size_t n, std::uint32_t q) {
  if (n < 3 || n > 5) throw RangeError("flag scan needs 3 <= n <= 5");
  const auto [p, k] = split_prime_power(q);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) {
    total *= q;
    if (total > (1u << 20)) throw RangeError("flag scan needs q^(n*n) <= 2^20");
  }
  FieldPtr F = FiniteField::get(p, k);

  FlagScanReport rep;
  rep.n = n;
  rep.q = q;
  auto violate = [&](const FFMatrix& x, std::string what) {
    ++rep.violation_count;
    if (rep.violations.size() < kMaxReportedViolations) rep.violations.push_back({x, std::move(what)});
  };

  for (std::uint64_t code = 0; code < total; ++code) {
    FFMatrix x = FFMatrix::from_index(F, n, code);
    if (!x.invertible()) continue;
    ++rep.scanned;
    EigenData d = eigen_data(x);
    if (max_eigenspace_dim(d) + 1 >= n) continue;
    ++rep.eligible;

    FlagResult fr = invariant_flag(x);
    ++rep.by_case[static_cast<std::size_t>(fr.kind)];
    const Flag& f = fr.flag;
    if (!flag_dimensions_ok(f)) {
      violate(x, std::string("dimension bounds fail (") + flag_case_name(fr.kind) + ")");
      continue;
    }
    const auto cent = centralizer(x);
    rep.centralizer_elements += cent.size();
    for (const auto& y : cent) {
      const FFMatrix ys = y.embed(fr.data.embedding);
      if (!(f.u.image(ys) == f.u) || !(f.u_prime.image(ys) == f.u_prime)) {
        violate(x, "not preserved by centralizer element " + y.to_string());
        break;
      }
    }
  }
  return rep;
}

}  // namespace spq
