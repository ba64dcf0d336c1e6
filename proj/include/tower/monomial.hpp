// Copyright 2026 The Tower Interpolation Authors.
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

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>

#include "tower/error.hpp"

namespace tower {

inline constexpr std::size_t kMaxVariables = 8;

// Exponent vector x_1^e_1 ... x_d^e_d with inline storage; d is fixed per
// monomial and all binary operations require matching d.
class Monomial {
 public:
  constexpr Monomial() = default;
  explicit constexpr Monomial(std::size_t dim) : dim_(checked_dim(dim)) {}
  constexpr Monomial(std::initializer_list<std::uint32_t> exponents)
      : dim_(checked_dim(exponents.size())) {
    std::copy(exponents.begin(), exponents.end(), exps_.begin());
  }

  static constexpr Monomial variable(std::size_t dim, std::size_t k, std::uint32_t power = 1) {
    Monomial m(dim);
    m.exps_[k] = power;
    return m;
  }
  static constexpr Monomial xy(std::uint32_t i, std::uint32_t j) { return Monomial{i, j}; }

  constexpr std::size_t dim() const noexcept { return dim_; }
  constexpr std::uint32_t operator[](std::size_t k) const noexcept { return exps_[k]; }
  constexpr std::uint32_t& operator[](std::size_t k) noexcept { return exps_[k]; }

  constexpr std::uint64_t degree() const noexcept {
    std::uint64_t d = 0;
    for (std::size_t k = 0; k < dim_; ++k) d += exps_[k];
    return d;
  }
  constexpr bool is_one() const noexcept { return degree() == 0; }

  constexpr Monomial operator*(const Monomial& other) const {
    check_dim(other);
    Monomial m(dim_);
    for (std::size_t k = 0; k < dim_; ++k) m.exps_[k] = exps_[k] + other.exps_[k];
    return m;
  }

  // True iff this divides other.
  constexpr bool divides(const Monomial& other) const {
    check_dim(other);
    for (std::size_t k = 0; k < dim_; ++k) {
      if (exps_[k] > other.exps_[k]) return false;
    }
    return true;
  }

  // other / this; requires divides(other).
  constexpr Monomial cofactor_in(const Monomial& other) const {
    Monomial m(dim_);
    for (std::size_t k = 0; k < dim_; ++k) m.exps_[k] = other.exps_[k] - exps_[k];
    return m;
  }

  constexpr Monomial lcm(const Monomial& other) const {
    check_dim(other);
    Monomial m(dim_);
    for (std::size_t k = 0; k < dim_; ++k) m.exps_[k] = std::max(exps_[k], other.exps_[k]);
    return m;
  }

  constexpr bool coprime_with(const Monomial& other) const {
    check_dim(other);
    for (std::size_t k = 0; k < dim_; ++k) {
      if (exps_[k] != 0 && other.exps_[k] != 0) return false;
    }
    return true;
  }

  // Storage order only (lexicographic on the exponent vector); use
  // compare() for term orders.
  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;

  constexpr void check_dim(const Monomial& other) const {
    if (dim_ != other.dim_) [[unlikely]] mismatch(dim_, other.dim_);
  }
  [[noreturn, gnu::noinline, gnu::cold]] static void mismatch(std::size_t a, std::size_t b) {
    throw Error(ErrorCode::kDimensionMismatch,
                "monomials of dimension " + std::to_string(a) + " and " + std::to_string(b));
  }

 private:
  static constexpr std::uint8_t checked_dim(std::size_t dim) {
    if (dim == 0 || dim > kMaxVariables) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "dimension " + std::to_string(dim) + " outside [1, " + std::to_string(kMaxVariables) + "]");
    }
    return static_cast<std::uint8_t>(dim);
  }

  std::uint8_t dim_ = 0;
  std::array<std::uint32_t, kMaxVariables> exps_{};
};

// lex and tdlex let the first variable (x) dominate; inlex and tdinlex let
// the last variable (y) dominate. The td* orders compare total degree first.
enum class TermOrder { kLex, kInlex, kTdlex, kTdinlex };

constexpr std::string_view to_string(TermOrder o) {
  switch (o) {
    case TermOrder::kLex: return "lex";
    case TermOrder::kInlex: return "inlex";
    case TermOrder::kTdlex: return "tdlex";
    case TermOrder::kTdinlex: return "tdinlex";
  }
  return "?";
}

inline TermOrder parse_term_order(std::string_view name) {
  if (name == "lex") return TermOrder::kLex;
  if (name == "inlex") return TermOrder::kInlex;
  if (name == "tdlex") return TermOrder::kTdlex;
  if (name == "tdinlex") return TermOrder::kTdinlex;
  throw Error(ErrorCode::kParseError, "unknown term order '" + std::string(name) + "'");
}

constexpr bool is_total_degree(TermOrder o) { return o == TermOrder::kTdlex || o == TermOrder::kTdinlex; }
constexpr bool is_first_dominant(TermOrder o) { return o == TermOrder::kLex || o == TermOrder::kTdlex; }

constexpr std::strong_ordering compare(const Monomial& a, const Monomial& b, TermOrder o) {
  a.check_dim(b);
  const std::size_t d = a.dim();
  if (is_total_degree(o)) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  }
  if (is_first_dominant(o)) {
    for (std::size_t k = 0; k < d; ++k) {
      if (auto c = a[k] <=> b[k]; c != 0) return c;
    }
  } else {
    for (std::size_t k = d; k-- > 0;) {
      if (auto c = a[k] <=> b[k]; c != 0) return c;
    }
  }
  return std::strong_ordering::equal;
}

struct OrderLess {
  TermOrder order;
  constexpr bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b, order) < 0; }
};

struct OrderGreater {
  TermOrder order;
  constexpr bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b, order) > 0; }
};

// Index pairs (i, j) label nodes and Newton polynomials of tower sites.
struct IndexPair {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  friend constexpr bool operator==(const IndexPair&, const IndexPair&) = default;
};

enum class IndexOrder { kInlex, kLex };

// inlex: j decides first, then i. lex: i first, then j.
constexpr std::strong_ordering index_order_compare(IndexPair a, IndexPair b, IndexOrder o) {
  if (o == IndexOrder::kInlex) {
    if (auto c = a.j <=> b.j; c != 0) return c;
    return a.i <=> b.i;
  }
  if (auto c = a.i <=> b.i; c != 0) return c;
  return a.j <=> b.j;
}

inline std::string variable_name(std::size_t dim, std::size_t k) {
  if (dim == 2) return k == 0 ? "x" : "y";
  return "x" + std::to_string(k + 1);
}

// "x^2*y^1" style; the constant monomial renders as "1".
inline std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t k = 0; k < m.dim(); ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(m.dim(), k) + "^" + std::to_string(m[k]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace tower
