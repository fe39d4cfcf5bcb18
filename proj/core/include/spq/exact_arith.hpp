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

// Exact integers and dense integer polynomials.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace spq {

using BigInt = mpz_class;

std::string to_decimal(const BigInt& v);
/// Parses an optionally signed decimal string; throws ParseError on junk.
BigInt parse_decimal(std::string_view text);

BigInt pow(const BigInt& base, std::uint64_t exponent);
BigInt pow2(std::uint64_t exponent);
/// n! as an exact product (balanced product tree).
BigInt factorial(std::uint64_t n);
/// Product of the integers in [lo, hi]; 1 when the range is empty.
BigInt range_product(std::uint64_t lo, std::uint64_t hi);
std::uint64_t to_u64(const BigInt& v);  // throws RangeError if it does not fit

/// Dense polynomial with integer coefficients; coeffs()[i] multiplies x^i.
/// The coefficient list never ends in a zero, so the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(std::size_t degree, const BigInt& c = 1);
  /// x^n - c
  static IntPoly binomial(std::size_t n, long c);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  const BigInt& leading() const { return coeffs_.back(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

  BigInt evaluate(const BigInt& x) const;

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
  bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

  /// Number of leading zero coefficients, i.e. the largest k with x^k | p.
  std::size_t low_order_zeros() const;
  IntPoly shift_down(std::size_t k) const;

  std::string to_string(char var = 'x') const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// Divides `num` by the monic polynomial `den`. Returns true and stores the
/// quotient when the division is exact.
bool divide_exact(const IntPoly& num, const IntPoly& den, IntPoly& quotient);

/// x^qPower * prod Phi_d^{e_d}; `residual` is 1 for every successful
/// factorisation and kept for inspection.
struct CycloFactorization {
  std::uint64_t q_power = 0;
  std::map<std::uint64_t, std::uint64_t> factors;
  IntPoly residual{1};

  std::uint64_t multiplicity(std::uint64_t d) const {
    auto it = factors.find(d);
    return it == factors.end() ? 0 : it->second;
  }
  bool operator==(const CycloFactorization& o) const {
    return q_power == o.q_power && factors == o.factors && residual == o.residual;
  }
  CycloFactorization& operator*=(const CycloFactorization& o);
  std::string to_string() const;
};

std::uint64_t euler_phi(std::uint64_t n);

/// Phi_d, obtained by dividing x^d - 1 by every Phi_e with e | d, e < d.
IntPoly cyclotomic(std::uint64_t d);

/// Greedy trial division by Phi_1, Phi_2, ...; throws NotCyclotomicProduct
/// when anything other than a unit is left over.
CycloFactorization factor_cyclotomic(const IntPoly& p);

/// x^n - omega (omega = +1 or -1) as an exponent map read off the divisors of
/// n (resp. 2n).
CycloFactorization binomial_factorization(std::uint64_t n, int omega);

IntPoly expand(const CycloFactorization& f);

/// q^N * prod Phi_d(q)^{e_d}, exactly.
BigInt eval_at(const CycloFactorization& f, const BigInt& q);

}  // namespace spq
