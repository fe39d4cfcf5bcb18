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

// The invariant-flag construction for a matrix without a big eigenspace, done
// over the splitting field of its characteristic polynomial, plus the
// exhaustive scans that check it against brute-force centralizers.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "spq/ff_matrix.hpp"

namespace spq {

/// det(tI - X) over X's field, by reduction to Hessenberg form.
FFPoly char_poly(const FFMatrix& x);

struct Eigenvalue {
  FiniteField::Elem value = 0;  // in the splitting field
  unsigned algebraic_multiplicity = 0;
  std::size_t eigenspace_dim = 0;
  /// kernel_dims[j-1] = dim ker (X - value I)^j for j = 1 .. algebraic multiplicity.
  std::vector<std::size_t> kernel_dims;
};

struct EigenData {
  FieldPtr base;
  FieldPtr splitting;
  Embedding embedding;  // base -> splitting
  FFMatrix x;           // X over the splitting field
  std::vector<Eigenvalue> eigenvalues;  // ascending by encoding
};

/// Smallest extension GF(q^m) over which charPoly(X) splits, and the Jordan
/// data of X there. Throws TooLarge if that field is out of reach.
EigenData eigen_data(const FFMatrix& x);

enum class FlagCase {
  OneRootCyclic,   // one root, one-dimensional eigenspace
  OneRoot,         // one root, bigger eigenspace
  TwoRootsLine,    // two roots, the smaller eigenspace is a line
  TwoRoots,        // two roots, smaller eigenspace of dimension >= 2
  ThreeOrMore,
};

const char* flag_case_name(FlagCase c);

struct Flag {
  Subspace u;
  Subspace u_prime;
};

struct FlagResult {
  EigenData data;
  FlagCase kind;
  Flag flag;
};

/// Largest eigenspace dimension of X over its splitting field.
std::size_t max_eigenspace_dim(const EigenData& d);

/// Builds (U, U'). Requires n >= 3, X invertible and every eigenspace of
/// dimension < n - 1; otherwise PreconditionViolated.
FlagResult invariant_flag(const FFMatrix& x);

/// U <= U' and dim U, dim U'/U, dim V/U' all at most n - 2, with U != 0.
bool flag_dimensions_ok(const Flag& f);

/// All invertible Y over X's field with XY = YX. The commutant is solved as a
/// linear system and then enumerated; TooLarge when it has more than `budget`
/// elements.
std::vector<FFMatrix> centralizer(const FFMatrix& x, std::uint64_t budget = 1u << 20);

struct FlagViolation {
  FFMatrix x;
  std::string what;
};

struct FlagScanReport {
  std::size_t n = 0;
  std::uint32_t q = 0;
  std::uint64_t scanned = 0;    // invertible matrices visited
  std::uint64_t eligible = 0;   // those meeting the eigenspace precondition
  std::uint64_t centralizer_elements = 0;
  std::array<std::uint64_t, 5> by_case{};
  std::uint64_t violation_count = 0;
  std::vector<FlagViolation> violations;  // first few only

  bool ok() const { return violation_count == 0; }
};

/// Every X in GL_n(q): build the flag when eligible and check it is preserved
/// by the whole centralizer and has the right dimensions. q must be a prime
/// power and q^(n*n) at most 2^20, else RangeError.
FlagScanReport flag_scan(std::size_t n, std::uint32_t q);

/// Splits a prime power into (p, k); throws InvalidParameters otherwise.
std::pair<std::uint32_t, unsigned> split_prime_power(std::uint32_t q);

}  // namespace spq
