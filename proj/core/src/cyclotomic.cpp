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

#include <mutex>
#include <unordered_map>

#include "spq/errors.hpp"
#include "spq/exact_arith.hpp"

namespace spq {

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Shared memo for cyclotomic polynomials; entries are immutable once inserted.
class CyclotomicCache {
 public:
  IntPoly get(std::uint64_t d) {
    {
      std::lock_guard lock(mu_);
      if (auto it = table_.find(d); it != table_.end()) return it->second;
    }
    IntPoly quotient = IntPoly::binomial(d, 1);
    for (std::uint64_t e = 1; e < d; ++e) {
      if (d % e != 0) continue;
      IntPoly next;
      if (!divide_exact(quotient, get(e), next)) {
        throw Error("internal: Phi_" + std::to_string(e) + " does not divide x^" + std::to_string(d) + " - 1");
      }
      quotient = std::move(next);
    }
    std::lock_guard lock(mu_);
    return table_.emplace(d, std::move(quotient)).first->second;
  }

 private:
  std::mutex mu_;
  std::unordered_map<std::uint64_t, IntPoly> table_;
};

CyclotomicCache& cache() {
  static CyclotomicCache c;
  return c;
}

}  // namespace

IntPoly cyclotomic(std::uint64_t d) {
  if (d == 0) throw InvalidParameters("cyclotomic index must be positive");
  return cache().get(d);
}

CycloFactorization factor_cyclotomic(const IntPoly& p) {
  if (p.is_zero()) throw NotCyclotomicProduct("zero polynomial");
  CycloFactorization out;
  out.q_power = p.low_order_zeros();
  IntPoly rest = p.shift_down(out.q_power);

  // phi(d) >= sqrt(d/2), so no Phi_d with d > 2 deg^2 can divide.
  const auto start_degree = static_cast<std::uint64_t>(rest.degree());
  const std::uint64_t limit = 2 * start_degree * start_degree + 2;
  for (std::uint64_t d = 1; rest.degree() > 0 && d <= limit; ++d) {
    if (euler_phi(d) > static_cast<std::uint64_t>(rest.degree())) continue;
    const IntPoly phi = cyclotomic(d);
    IntPoly quotient;
    while (divide_exact(rest, phi, quotient)) {
      rest = std::move(quotient);
      ++out.factors[d];
    }
  }
  if (!rest.is_one()) {
    throw NotCyclotomicProduct("residual " + rest.to_string() + " after cyclotomic trial division");
  }
  return out;
}

CycloFactorization binomial_factorization(std::uint64_t n, int omega) {
  if (n == 0 || (omega != 1 && omega != -1)) throw InvalidParameters("x^n - omega needs n >= 1, omega = +-1");
  CycloFactorization out;
  if (omega == 1) {
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d == 0) ++out.factors[d];
    }
  } else {
    for (std::uint64_t d = 1; d <= 2 * n; ++d) {
      if ((2 * n) % d == 0 && n % d != 0) ++out.factors[d];
    }
  }
  return out;
}

IntPoly expand(const CycloFactorization& f) {
  IntPoly out = IntPoly::monomial(f.q_power);
  for (const auto& [d, e] : f.factors) {
    const IntPoly phi = cyclotomic(d);
    for (std::uint64_t i = 0; i < e; ++i) out *= phi;
  }
  return out * f.residual;
}

BigInt eval_at(const CycloFactorization& f, const BigInt& q) {
  BigInt out = pow(q, f.q_power);
  for (const auto& [d, e] : f.factors) out *= pow(cyclotomic(d).evaluate(q), e);
  return out * f.residual.evaluate(q);
}

}  // namespace spq
