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

// Dense square matrices and subspaces over a FiniteField.

#include <string>
#include <vector>

#include "spq/finite_field.hpp"

namespace spq {

using FFVector = std::vector<FiniteField::Elem>;

class FFMatrix {
 public:
  using Elem = FiniteField::Elem;

  FFMatrix(FieldPtr field, std::size_t n);  // zero matrix
  FFMatrix(FieldPtr field, std::size_t n, std::vector<Elem> entries);  // row-major
  static FFMatrix identity(FieldPtr field, std::size_t n);
  static FFMatrix scalar(FieldPtr field, std::size_t n, Elem s);
  static FFMatrix diagonal(FieldPtr field, const std::vector<Elem>& d);
  /// Companion matrix of a monic polynomial (coefficients low to high).
  static FFMatrix companion(const FFPoly& monic);
  /// The matrix with entries numbered by `code` in base |F|, row-major.
  static FFMatrix from_index(FieldPtr field, std::size_t n, std::uint64_t code);

  const FieldPtr& field() const { return field_; }
  std::size_t n() const { return n_; }
  Elem at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  Elem& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const std::vector<Elem>& entries() const { return a_; }

  FFMatrix operator*(const FFMatrix& o) const;
  FFMatrix operator+(const FFMatrix& o) const;
  FFMatrix operator-(const FFMatrix& o) const;
  FFVector apply(const FFVector& v) const;
  bool operator==(const FFMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const FFMatrix& o) const { return !(*this == o); }

  Elem det() const;
  bool invertible() const { return det() != 0; }
  FFMatrix inverse() const;  // throws InvalidParameters when singular
  std::size_t rank() const;
  /// Basis of {v : A v = 0}, in reduced row echelon form.
  std::vector<FFVector> kernel() const;
  FFMatrix embed(const Embedding& e) const;

  std::string to_string() const;

 private:
  FieldPtr field_;
  std::size_t n_;
  std::vector<Elem> a_;
};

/// Reduces rows in place to reduced row echelon form, dropping zero rows.
void rref(const FiniteField& F, std::vector<FFVector>& rows);

/// A subspace of F^n kept as its reduced row echelon basis, so equality of
/// subspaces is equality of bases.
class Subspace {
 public:
  Subspace(FieldPtr field, std::size_t n, std::vector<FFVector> spanning);
  static Subspace zero(FieldPtr field, std::size_t n) { return Subspace(std::move(field), n, {}); }

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient() const { return n_; }
  const std::vector<FFVector>& basis() const { return basis_; }
  const FieldPtr& field() const { return field_; }

  Subspace operator+(const Subspace& o) const;
  bool contains(const Subspace& o) const;
  /// The image A U.
  Subspace image(const FFMatrix& a) const;
  bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }

 private:
  FieldPtr field_;
  std::size_t n_;
  std::vector<FFVector> basis_;
};

}  // namespace spq
