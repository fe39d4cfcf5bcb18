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

#include "spq/ff_matrix.hpp"

#include <sstream>

#include "spq/errors.hpp"

namespace spq {

FFMatrix::FFMatrix(FieldPtr field, std::size_t n) : field_(std::move(field)), n_(n), a_(n * n, 0) {}

FFMatrix::FFMatrix(FieldPtr field, std::size_t n, std::vector<Elem> entries)
    : field_(std::move(field)), n_(n), a_(std::move(entries)) {
  if (a_.size() != n * n) throw InvalidParameters("matrix needs n*n entries");
  for (auto v : a_) {
    if (v >= field_->size()) throw InvalidParameters("entry outside " + field_->name());
  }
}

FFMatrix FFMatrix::identity(FieldPtr field, std::size_t n) { return scalar(std::move(field), n, 1); }

FFMatrix FFMatrix::scalar(FieldPtr field, std::size_t n, Elem s) {
  FFMatrix m(std::move(field), n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = s;
  return m;
}

FFMatrix FFMatrix::diagonal(FieldPtr field, const std::vector<Elem>& d) {
  FFMatrix m(std::move(field), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

FFMatrix FFMatrix::companion(const FFPoly& monic) {
  if (monic.degree() < 1 || monic.c.back() != 1) throw InvalidParameters("companion matrix needs a monic polynomial");
  const auto n = static_cast<std::size_t>(monic.degree());
  const auto& F = *monic.field;
  FFMatrix m(monic.field, n);
  for (std::size_t i = 1; i < n; ++i) m.at(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1) = F.neg(monic.c[i]);
  return m;
}

FFMatrix FFMatrix::from_index(FieldPtr field, std::size_t n, std::uint64_t code) {
  FFMatrix m(field, n);
  const std::uint64_t q = field->size();
  for (std::size_t i = 0; i < n * n; ++i) {
    m.a_[i] = static_cast<Elem>(code % q);
    code /= q;
  }
  return m;
}

FFMatrix FFMatrix::operator*(const FFMatrix& o) const {
  const auto& F = *field_;
  FFMatrix out(field_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const Elem x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) out.at(i, j) = F.add(out.at(i, j), F.mul(x, o.at(k, j)));
    }
  }
  return out;
}

FFMatrix FFMatrix::operator+(const FFMatrix& o) const {
  FFMatrix out(field_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_->add(a_[i], o.a_[i]);
  return out;
}

FFMatrix FFMatrix::operator-(const FFMatrix& o) const {
  FFMatrix out(field_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_->sub(a_[i], o.a_[i]);
  return out;
}

FFVector FFMatrix::apply(const FFVector& v) const {
  const auto& F = *field_;
  FFVector out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    Elem acc = 0;
    for (std::size_t j = 0; j < n_; ++j) acc = F.add(acc, F.mul(at(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

FFMatrix::Elem FFMatrix::det() const {
  const auto& F = *field_;
  std::vector<Elem> m = a_;
  Elem d = 1;
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = c;
    while (piv < n_ && m[piv * n_ + c] == 0) ++piv;
    if (piv == n_) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(m[piv * n_ + j], m[c * n_ + j]);
      d = F.neg(d);
    }
    const Elem p = m[c * n_ + c];
    d = F.mul(d, p);
    const Elem pinv = F.inv(p);
    for (std::size_t r = c + 1; r < n_; ++r) {
      const Elem f = F.mul(m[r * n_ + c], pinv);
      if (f == 0) continue;
      for (std::size_t j = c; j < n_; ++j) m[r * n_ + j] = F.sub(m[r * n_ + j], F.mul(f, m[c * n_ + j]));
    }
  }
  return d;
}

FFMatrix FFMatrix::inverse() const {
  const auto& F = *field_;
  std::vector<FFVector> rows(n_, FFVector(2 * n_, 0));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) rows[i][j] = at(i, j);
    rows[i][n_ + i] = 1;
  }
  rref(F, rows);
  if (rows.size() != n_ || rows[n_ - 1][n_ - 1] != 1) throw InvalidParameters("matrix is singular");
  FFMatrix out(field_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i][i] != 1) throw InvalidParameters("matrix is singular");
    for (std::size_t j = 0; j < n_; ++j) out.at(i, j) = rows[i][n_ + j];
  }
  return out;
}

std::size_t FFMatrix::rank() const {
  std::vector<FFVector> rows(n_);
  for (std::size_t i = 0; i < n_; ++i) rows[i].assign(a_.begin() + i * n_, a_.begin() + (i + 1) * n_);
  rref(*field_, rows);
  return rows.size();
}

std::vector<FFVector> FFMatrix::kernel() const {
  const auto& F = *field_;
  std::vector<FFVector> rows(n_);
  for (std::size_t i = 0; i < n_; ++i) rows[i].assign(a_.begin() + i * n_, a_.begin() + (i + 1) * n_);
  rref(F, rows);
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(n_, false);
  for (const auto& r : rows) {
    std::size_t c = 0;
    while (r[c] == 0) ++c;
    pivot_of_row.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<FFVector> basis;
  for (std::size_t free = 0; free < n_; ++free) {
    if (is_pivot[free]) continue;
    FFVector v(n_, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) v[pivot_of_row[i]] = F.neg(rows[i][free]);
    basis.push_back(std::move(v));
  }
  rref(F, basis);
  return basis;
}

FFMatrix FFMatrix::embed(const Embedding& e) const {
  FFMatrix out(e.target(), n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = e(a_[i]);
  return out;
}

std::string FFMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < n_; ++j) os << (j ? " " : "") << at(i, j);
  }
  os << "]";
  return os.str();
}

void rref(const FiniteField& F, std::vector<FFVector>& rows) {
  if (rows.empty()) return;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const auto inv = F.inv(rows[r][c]);
    for (auto& x : rows[r]) x = F.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const auto f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
    }
    ++r;
  }
  rows.resize(r);
}

Subspace::Subspace(FieldPtr field, std::size_t n, std::vector<FFVector> spanning)
    : field_(std::move(field)), n_(n), basis_(std::move(spanning)) {
  for (const auto& v : basis_) {
    if (v.size() != n_) throw InvalidParameters("vector of wrong length");
  }
  rref(*field_, basis_);
}

Subspace Subspace::operator+(const Subspace& o) const {
  std::vector<FFVector> all = basis_;
  all.insert(all.end(), o.basis_.begin(), o.basis_.end());
  return Subspace(field_, n_, std::move(all));
}

bool Subspace::contains(const Subspace& o) const { return (*this + o).dim() == dim(); }

Subspace Subspace::image(const FFMatrix& a) const {
  std::vector<FFVector> img;
  img.reserve(basis_.size());
  for (const auto& v : basis_) img.push_back(a.apply(v));
  return Subspace(field_, n_, std::move(img));
}

}  // namespace spq
