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

#include <cctype>
#include <string>
#include <vector>

#include "spq/errors.hpp"
#include "spq/group_id.hpp"

namespace spq {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view word) {
    if (s_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(pos_, std::string("expected '") + c + "'");
  }
  std::uint64_t number() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      const auto digit = static_cast<std::uint64_t>(peek() - '0');
      if (v > (UINT64_MAX - digit) / 10) throw ParseError(start, "number too large");
      v = v * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) throw ParseError(start, "expected a number");
    return v;
  }
  std::vector<std::uint64_t> arguments() {
    expect('(');
    std::vector<std::uint64_t> args{number()};
    while (accept(',')) args.push_back(number());
    expect(')');
    return args;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t single(const std::vector<std::uint64_t>& args, std::size_t at) {
  if (args.size() != 1) throw ParseError(at, "expected exactly one parameter");
  return args[0];
}

std::pair<std::uint64_t, std::uint64_t> pair_of(const std::vector<std::uint64_t>& args, std::size_t at) {
  if (args.size() != 2) throw ParseError(at, "expected two parameters (dimension or rank, q)");
  return {args[0], args[1]};
}

unsigned as_rank(std::uint64_t r, std::size_t at) {
  if (r == 0 || r > 1000) throw ParseError(at, "rank out of range");
  return static_cast<unsigned>(r);
}

// Classical sugar: "Sp(2n,q)", "L(n,q)", "U(n,q)", "O(2n+1,q)", "O+(2n,q)", "O-(2n,q)".
std::optional<GroupId> parse_sugar(Cursor& c, Version v) {
  const std::size_t at = c.pos();
  LieFamily family;
  int kind;  // 0: rank = dim-1, 1: rank = dim/2, 2: rank = (dim-1)/2
  if (c.accept("PSp") || c.accept("Sp")) {
    family = LieFamily::C;
    kind = 1;
  } else if (c.accept("PSL") || c.accept("L")) {
    family = LieFamily::A;
    kind = 0;
  } else if (c.accept("PSU") || c.accept("U")) {
    family = LieFamily::A2;
    kind = 0;
  } else if (c.accept("O+")) {
    family = LieFamily::D;
    kind = 1;
  } else if (c.accept("O-")) {
    family = LieFamily::D2;
    kind = 1;
  } else if (c.accept("O")) {
    family = LieFamily::B;
    kind = 2;
  } else {
    return std::nullopt;
  }
  if (c.peek() != '(') throw ParseError(c.pos(), "expected '(' after classical group symbol");
  auto [dim, q] = pair_of(c.arguments(), at);
  std::uint64_t rank = 0;
  switch (kind) {
    case 0:
      if (dim < 2) throw ParseError(at, "dimension must be at least 2");
      rank = dim - 1;
      break;
    case 1:
      if (dim % 2 != 0) throw ParseError(at, "dimension must be even");
      rank = dim / 2;
      break;
    default:
      if (dim % 2 != 1 || dim < 3) throw ParseError(at, "dimension must be odd and at least 3");
      rank = (dim - 1) / 2;
      break;
  }
  return GroupId::lie(family, as_rank(rank, at), q, v);
}

GroupId parse_lie(Cursor& c, Version v) {
  const std::size_t at = c.pos();
  std::string twist;
  if (c.peek() == '2' || c.peek() == '3') twist.push_back(c.peek()), c.accept(c.peek());
  const char letter = c.peek();
  if (std::string_view("ABCDEFG").find(letter) == std::string_view::npos || letter == '\0') {
    throw ParseError(c.pos(), "expected a Lie type letter");
  }
  c.accept(letter);
  c.accept('_');
  std::optional<unsigned> rank;
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) rank = as_rank(c.number(), at);

  // Exceptional tokens carry the rank in the family name ("G2", "2E6").
  std::optional<LieFamily> family;
  if (rank) family = family_from_token(twist + letter + std::to_string(*rank));
  if (!family) family = family_from_token(twist + letter);
  if (!family) throw ParseError(at, "unknown Lie type '" + twist + letter + "'");

  const auto args = c.arguments();
  if (auto fixed = fixed_rank(*family)) {
    if (rank && *rank != *fixed) throw ParseError(at, "wrong rank for exceptional type");
    return GroupId::lie(*family, *fixed, single(args, at), v);
  }
  if (rank) return GroupId::lie(*family, *rank, single(args, at), v);
  auto [r, q] = pair_of(args, at);
  return GroupId::lie(*family, as_rank(r, at), q, v);
}

}  // namespace

GroupId parse_group(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError(0, "empty group name");

  Version v = Version::Adjoint;
  constexpr std::string_view kUniversal = "[universal]";
  if (s.size() >= kUniversal.size() && s.substr(s.size() - kUniversal.size()) == kUniversal) {
    v = Version::Universal;
    s = trim(s.substr(0, s.size() - kUniversal.size()));
  }

  if (s == "Tits" || s == "T" || s == "2F4(2)'") return GroupId::tits();
  if (s.find('(') == std::string_view::npos && s.substr(0, 4) != "Alt_" && s.substr(0, 2) != "Z_") {
    return GroupId::sporadic(s);
  }

  Cursor c(s);
  GroupId out = [&] {
    if (c.accept("Alt")) {
      if (c.accept('_')) return GroupId::alternating(c.number());
      return GroupId::alternating(single(c.arguments(), 3));
    }
    if (c.accept("Z_")) return GroupId::cyclic(c.number());
    if (c.accept("Cyclic") || c.accept("Z")) return GroupId::cyclic(single(c.arguments(), 0));
    if (auto sugar = parse_sugar(c, v)) return *sugar;
    return parse_lie(c, v);
  }();
  if (!c.done()) throw ParseError(c.pos(), "unexpected trailing characters");
  return out;
}

}  // namespace spq
