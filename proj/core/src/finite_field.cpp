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

#include "spq/finite_field.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "spq/errors.hpp"

namespace spq {

namespace {

constexpr std::uint32_t kMaxFieldSize = 1u << 22;

}  // namespace

FieldPtr FiniteField::get(std::uint32_t p, unsigned k) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, FieldPtr> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{p, k}];
  if (!slot) slot = std::make_shared<const FiniteField>(p, k);
  return slot;
}

FiniteField::FiniteField(std::uint32_t p, unsigned k) : p_(p), k_(k) {
  if (p < 2 || k < 1) throw InvalidParameters("field needs a prime p and degree k >= 1");
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw InvalidParameters(std::to_string(p) + " is not prime");
  }
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldSize) throw TooLarge("GF(" + std::to_string(p) + "^" + std::to_string(k) + ") is too large");
  }
  q_ = static_cast<std::uint32_t>(q);

  // Multiplication by x modulo f, on digit vectors.
  std::vector<std::uint32_t> lower(k);
  auto times_x = [&](std::vector<std::uint32_t>& d) {
    const std::uint32_t top = d[k - 1];
    for (unsigned i = k - 1; i > 0; --i) d[i] = d[i - 1];
    d[0] = 0;
    for (unsigned i = 0; i < k; ++i) {
      d[i] = static_cast<std::uint32_t>((d[i] + std::uint64_t{p - lower[i]} * top) % p);
    }
  };
  auto encode = [&](const std::vector<std::uint32_t>& d) {
    std::uint32_t v = 0;
    for (unsigned i = k; i-- > 0;) v = v * p + d[i];
    return v;
  };

  for (std::uint32_t cand = 1; cand < q_; ++cand) {
    std::uint32_t c = cand;
    for (unsigned i = 0; i < k; ++i) {
      lower[i] = c % p;
      c /= p;
    }
    if (lower[0] == 0) continue;
    std::vector<std::uint32_t> d(k, 0);
    d[0] = 1;
    std::vector<Elem> exp;
    exp.reserve(q_ - 1);
    bool primitive = true;
    for (std::uint32_t step = 0; step < q_ - 1; ++step) {
      const Elem v = encode(d);
      if (step > 0 && v == 1) {
        primitive = false;
        break;
      }
      exp.push_back(v);
      times_x(d);
    }
    if (!primitive || encode(d) != 1) continue;
    exp_ = std::move(exp);
    modulus_ = lower;
    modulus_.push_back(1);
    break;
  }
  if (exp_.empty()) throw Error("internal: no primitive polynomial found");
  log_.assign(q_, 0);
  for (std::uint32_t i = 0; i < q_ - 1; ++i) log_[exp_[i]] = i;
}

std::string FiniteField::name() const {
  if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(q_) + ")";
}

FiniteField::Elem FiniteField::from_int(long v) const {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (k_ == 1) return (a + b) % p_;
  Elem out = 0;
  Elem scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  if (p_ == 2) return a;
  if (k_ == 1) return (p_ - a) % p_;
  Elem out = 0;
  Elem scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw InvalidParameters("division by zero in " + name());
  const std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

std::vector<std::uint32_t> FiniteField::digits(Elem a) const {
  std::vector<std::uint32_t> d(k_);
  for (unsigned i = 0; i < k_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

FiniteField::Elem FiniteField::from_digits(const std::vector<std::uint32_t>& d) const {
  Elem v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i] % p_;
  return v;
}

Embedding::Embedding(FieldPtr small, FieldPtr big) : small_(std::move(small)), big_(std::move(big)) {
  if (small_->characteristic() != big_->characteristic() || big_->degree() % small_->degree() != 0) {
    throw InvalidParameters(small_->name() + " does not embed in " + big_->name());
  }
  const auto& f = small_->modulus();
  FiniteField::Elem root = 0;
  bool found = false;
  for (FiniteField::Elem r = 0; r < big_->size() && !found; ++r) {
    FiniteField::Elem acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = big_->add(big_->mul(acc, r), f[i]);
    if (acc == 0) {
      root = r;
      found = true;
    }
  }
  if (!found) throw Error("internal: defining polynomial has no root in " + big_->name());
  table_.resize(small_->size());
  for (FiniteField::Elem a = 0; a < small_->size(); ++a) {
    const auto d = small_->digits(a);
    FiniteField::Elem acc = 0;
    for (std::size_t i = d.size(); i-- > 0;) acc = big_->add(big_->mul(acc, root), d[i]);
    table_[a] = acc;
  }
}

void FFPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

FiniteField::Elem FFPoly::eval(FiniteField::Elem x) const {
  FiniteField::Elem acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = field->add(field->mul(acc, x), c[i]);
  return acc;
}

FFPoly FFPoly::operator*(const FFPoly& o) const {
  FFPoly out{field, {}};
  if (c.empty() || o.c.empty()) return out;
  out.c.assign(c.size() + o.c.size() - 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < o.c.size(); ++j) out.c[i + j] = field->add(out.c[i + j], field->mul(c[i], o.c[j]));
  }
  out.trim();
  return out;
}

FFPoly FFPoly::operator-(const FFPoly& o) const {
  FFPoly out{field, c};
  if (out.c.size() < o.c.size()) out.c.resize(o.c.size(), 0);
  for (std::size_t i = 0; i < o.c.size(); ++i) out.c[i] = field->sub(out.c[i], o.c[i]);
  out.trim();
  return out;
}

FFPoly FFPoly::embed(const Embedding& e) const {
  FFPoly out{e.target(), {}};
  out.c.reserve(c.size());
  for (auto v : c) out.c.push_back(e(v));
  out.trim();
  return out;
}

std::string FFPoly::to_string(char var) const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c[i] == 1 && i > 0;
    if (!unit) os << (field->degree() == 1 ? "" : "[") << c[i] << (field->degree() == 1 ? "" : "]");
    if (i > 0) os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

unsigned strip_root(FFPoly& p, FiniteField::Elem r) {
  unsigned mult = 0;
  const auto& F = *p.field;
  while (p.degree() >= 1 && p.eval(r) == 0) {
    // synthetic division by (t - r)
    std::vector<FiniteField::Elem> q(p.c.size() - 1);
    FiniteField::Elem carry = 0;
    for (std::size_t i = p.c.size(); i-- > 1;) {
      carry = F.add(p.c[i], F.mul(carry, r));
      q[i - 1] = carry;
    }
    p.c = std::move(q);
    p.trim();
    ++mult;
  }
  return mult;
}

}  // namespace spq
