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

#include "spq/exact_arith.hpp"

#include <algorithm>
#include <sstream>

#include "spq/errors.hpp"

namespace spq {

std::string to_decimal(const BigInt& v) { return v.get_str(10); }

BigInt parse_decimal(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw ParseError(i, "expected digits");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') throw ParseError(j, "non-digit in decimal integer");
  }
  BigInt v;
  v.set_str(std::string(text.substr(text[0] == '+' ? 1 : 0)), 10);
  return v;
}

BigInt pow(const BigInt& base, std::uint64_t exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

BigInt pow2(std::uint64_t exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, exponent);
  return r;
}

BigInt range_product(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) return 1;
  if (hi - lo < 16) {
    BigInt r = 1;
    for (std::uint64_t k = lo; k <= hi; ++k) r *= static_cast<unsigned long>(k);
    return r;
  }
  std::uint64_t mid = lo + (hi - lo) / 2;
  return range_product(lo, mid) * range_product(mid + 1, hi);
}

BigInt factorial(std::uint64_t n) { return range_product(1, n); }

std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
    throw RangeError("integer " + to_decimal(v) + " does not fit in 64 bits");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

// --- IntPoly ---------------------------------------------------------------

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(std::size_t degree, const BigInt& c) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::binomial(std::size_t n, long c) {
  std::vector<BigInt> v(n + 1);
  v[n] = 1;
  v[0] -= c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<BigInt> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

std::size_t IntPoly::low_order_zeros() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  return k;
}

IntPoly IntPoly::shift_down(std::size_t k) const {
  if (k >= coeffs_.size()) return {};
  return IntPoly(std::vector<BigInt>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

bool divide_exact(const IntPoly& num, const IntPoly& den, IntPoly& quotient) {
  if (den.is_zero() || den.leading() != 1) throw InvalidParameters("divisor must be monic");
  if (num.is_zero()) {
    quotient = IntPoly{};
    return true;
  }
  if (num.degree() < den.degree()) return false;
  std::vector<BigInt> rem = num.coeffs();
  const auto& d = den.coeffs();
  const std::size_t dn = d.size() - 1;
  std::vector<BigInt> q(rem.size() - dn);
  for (std::size_t i = rem.size(); i-- > dn;) {
    const BigInt c = rem[i];
    if (c == 0) continue;
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) rem[i - dn + j] -= c * d[j];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (rem[i] != 0) return false;
  }
  quotient = IntPoly(std::move(q));
  return true;
}

// --- CycloFactorization ------------------------------------------------------

CycloFactorization& CycloFactorization::operator*=(const CycloFactorization& o) {
  q_power += o.q_power;
  for (const auto& [d, e] : o.factors) factors[d] += e;
  residual *= o.residual;
  return *this;
}

std::string CycloFactorization::to_string() const {
  std::ostringstream os;
  os << "q^" << q_power;
  for (const auto& [d, e] : factors) {
    os << " Phi_" << d;
    if (e != 1) os << "^" << e;
  }
  if (!residual.is_one()) os << " * (" << residual.to_string('q') << ")";
  return os.str();
}

}  // namespace spq
