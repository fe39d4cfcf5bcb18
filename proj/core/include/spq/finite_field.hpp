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

// Small finite fields GF(p^k) with elements encoded as integers
// c_0 + c_1 p + ... + c_{k-1} p^{k-1} (coefficients of the polynomial basis),
// and embeddings between them.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace spq {

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

class FiniteField {
 public:
  using Elem = std::uint32_t;

  /// Cached instance; the defining polynomial is the first primitive monic
  /// polynomial of degree k in encoding order. Throws TooLarge past 2^22
  /// elements.
  static FieldPtr get(std::uint32_t p, unsigned k);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint32_t size() const noexcept { return q_; }
  /// Monic defining polynomial over GF(p), coefficients low to high.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  std::string name() const;

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  /// The class of x (for k = 1, the root of the linear modulus); it generates
  /// the multiplicative group.
  Elem generator() const noexcept { return q_ == 2 ? 1 : exp_[1]; }
  Elem from_int(long v) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  Elem inv(Elem a) const;  // throws InvalidParameters on 0
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// Coefficient vector over GF(p) of an element.
  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(const std::vector<std::uint32_t>& d) const;

  FiniteField(std::uint32_t p, unsigned k);

 private:
  std::uint32_t p_;
  unsigned k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

/// Ring homomorphism small -> big, where big has degree a multiple of small's
/// over the same prime. The image of x is the smallest root (by encoding) of
/// small's defining polynomial in big.
class Embedding {
 public:
  Embedding(FieldPtr small, FieldPtr big);
  FiniteField::Elem operator()(FiniteField::Elem a) const { return table_[a]; }
  const FieldPtr& source() const { return small_; }
  const FieldPtr& target() const { return big_; }

 private:
  FieldPtr small_;
  FieldPtr big_;
  std::vector<FiniteField::Elem> table_;
};

/// Polynomials over a FiniteField, coefficients low to high, no trailing
/// zeros (the zero polynomial is empty).
struct FFPoly {
  FieldPtr field;
  std::vector<FiniteField::Elem> c;

  long degree() const { return static_cast<long>(c.size()) - 1; }
  void trim();
  FiniteField::Elem eval(FiniteField::Elem x) const;
  FFPoly operator*(const FFPoly& o) const;
  FFPoly operator-(const FFPoly& o) const;
  bool operator==(const FFPoly& o) const { return c == o.c; }
  /// Maps coefficients through an embedding.
  FFPoly embed(const Embedding& e) const;
  std::string to_string(char var = 't') const;
};

/// Divides p by (x - r) as often as possible; returns the multiplicity and
/// leaves the cofactor in p.
unsigned strip_root(FFPoly& p, FiniteField::Elem r);

}  // namespace spq
