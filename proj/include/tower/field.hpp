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

// Exact scalar fields: prime fields F_q with machine-word residues and the
// rationals backed by arbitrary-precision integers.

#include <charconv>
#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "tower/error.hpp"

namespace tower {

constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

// Residue in [0, q). The modulus travels with the value so operands from two
// different prime fields are caught instead of silently combined. A default
// constructed element has modulus 0 and is only a placeholder.
class PrimeElement {
 public:
  constexpr PrimeElement() = default;
  constexpr PrimeElement(std::uint32_t residue, std::uint32_t modulus)
      : value_(residue), modulus_(modulus) {}

  constexpr std::uint32_t value() const noexcept { return value_; }
  constexpr std::uint32_t modulus() const noexcept { return modulus_; }
  constexpr bool is_zero() const noexcept { return value_ == 0; }
  constexpr bool is_one() const noexcept { return value_ == 1; }

  friend PrimeElement operator+(PrimeElement a, PrimeElement b) {
    check_same(a, b);
    std::uint64_t s = std::uint64_t{a.value_} + b.value_;
    if (s >= a.modulus_) s -= a.modulus_;
    return {static_cast<std::uint32_t>(s), a.modulus_};
  }
  friend PrimeElement operator-(PrimeElement a, PrimeElement b) {
    check_same(a, b);
    std::uint32_t r = a.value_ >= b.value_ ? a.value_ - b.value_
                                           : a.value_ + (a.modulus_ - b.value_);
    return {r, a.modulus_};
  }
  friend PrimeElement operator*(PrimeElement a, PrimeElement b) {
    check_same(a, b);
    return {static_cast<std::uint32_t>(std::uint64_t{a.value_} * b.value_ % a.modulus_),
            a.modulus_};
  }
  friend PrimeElement operator/(PrimeElement a, PrimeElement b) { return a * b.inverse(); }
  PrimeElement operator-() const {
    return {value_ == 0 ? 0 : modulus_ - value_, modulus_};
  }
  PrimeElement& operator+=(PrimeElement b) { return *this = *this + b; }
  PrimeElement& operator-=(PrimeElement b) { return *this = *this - b; }
  PrimeElement& operator*=(PrimeElement b) { return *this = *this * b; }

  // Fermat: a^(q-2).
  PrimeElement inverse() const {
    if (value_ == 0) throw Error(ErrorCode::kZeroInversion, "inverse of 0 in F_" + std::to_string(modulus_));
    std::uint64_t result = 1, base = value_, e = modulus_ - 2;
    while (e > 0) {
      if (e & 1) result = result * base % modulus_;
      base = base * base % modulus_;
      e >>= 1;
    }
    return {static_cast<std::uint32_t>(result), modulus_};
  }

  friend bool operator==(PrimeElement a, PrimeElement b) {
    check_same(a, b);
    return a.value_ == b.value_;
  }
  // Canonical order: residues compared as integers in [0, q).
  friend std::strong_ordering operator<=>(PrimeElement a, PrimeElement b) {
    check_same(a, b);
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return std::to_string(value_); }

 private:
  static void check_same(PrimeElement a, PrimeElement b) {
    if (a.modulus_ != b.modulus_ || a.modulus_ == 0) [[unlikely]] mixed(a.modulus_, b.modulus_);
  }
  [[noreturn, gnu::noinline, gnu::cold]] static void mixed(std::uint32_t p, std::uint32_t q) {
    throw Error(ErrorCode::kMixedContexts, "operands from F_" + std::to_string(p) + " and F_" + std::to_string(q));
  }

  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Reduced fraction with positive denominator; equality is representational.
class RationalElement {
 public:
  RationalElement() = default;
  explicit RationalElement(BigRational v) : value_(std::move(v)) {}
  RationalElement(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(ErrorCode::kZeroInversion, "zero denominator");
    value_ = BigRational(num, den);
  }

  const BigRational& value() const noexcept { return value_; }
  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  friend RationalElement operator+(const RationalElement& a, const RationalElement& b) {
    return RationalElement(a.value_ + b.value_);
  }
  friend RationalElement operator-(const RationalElement& a, const RationalElement& b) {
    return RationalElement(a.value_ - b.value_);
  }
  friend RationalElement operator*(const RationalElement& a, const RationalElement& b) {
    return RationalElement(a.value_ * b.value_);
  }
  friend RationalElement operator/(const RationalElement& a, const RationalElement& b) {
    if (b.is_zero()) throw Error(ErrorCode::kZeroInversion, "division by 0 in Q");
    return RationalElement(a.value_ / b.value_);
  }
  RationalElement operator-() const { return RationalElement(-value_); }
  RationalElement& operator+=(const RationalElement& b) { value_ += b.value_; return *this; }
  RationalElement& operator-=(const RationalElement& b) { value_ -= b.value_; return *this; }
  RationalElement& operator*=(const RationalElement& b) { value_ *= b.value_; return *this; }

  RationalElement inverse() const {
    if (is_zero()) throw Error(ErrorCode::kZeroInversion, "inverse of 0 in Q");
    return RationalElement(1 / value_);
  }

  friend bool operator==(const RationalElement& a, const RationalElement& b) {
    return a.value_ == b.value_;
  }
  // Numeric order.
  friend std::strong_ordering operator<=>(const RationalElement& a, const RationalElement& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    BigInt den = denominator();
    if (den == 1) return numerator().str();
    return numerator().str() + "/" + den.str();
  }

 private:
  BigRational value_;
};

namespace detail {

struct ParsedFraction {
  BigInt numerator;
  BigInt denominator;
};

inline BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw Error(ErrorCode::kParseError, "not a number: '" + std::string(whole) + "'");
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') throw Error(ErrorCode::kParseError, "not a number: '" + std::string(whole) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Accepts "a" or "a/b" with optional signs.
inline ParsedFraction parse_fraction(std::string_view raw) {
  std::string_view text = trim(raw);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_integer(text, raw), BigInt(1)};
  BigInt num = parse_integer(trim(text.substr(0, slash)), raw);
  BigInt den = parse_integer(trim(text.substr(slash + 1)), raw);
  if (den == 0) throw Error(ErrorCode::kParseError, "zero denominator in '" + std::string(raw) + "'");
  return {num, den};
}

}  // namespace detail

class PrimeField {
 public:
  using Element = PrimeElement;

  explicit PrimeField(std::uint64_t q) : q_(static_cast<std::uint32_t>(q)) {
    if (q > 0xFFFFFFFFull || !is_prime(q)) {
      throw Error(ErrorCode::kNonPrimeField, std::to_string(q) + " is not a prime below 2^32");
    }
  }

  std::uint32_t characteristic() const noexcept { return q_; }
  std::string name() const { return "F_" + std::to_string(q_); }

  Element zero() const { return {0, q_}; }
  Element one() const { return {1, q_}; }
  Element from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(q_);
    if (r < 0) r += q_;
    return {static_cast<std::uint32_t>(r), q_};
  }
  Element parse(std::string_view text) const {
    auto f = detail::parse_fraction(text);
    BigInt q(q_);
    BigInt num = f.numerator % q;
    if (num < 0) num += q;
    BigInt den = f.denominator % q;
    if (den < 0) den += q;
    if (den == 0) {
      throw Error(ErrorCode::kParseError, "denominator vanishes in " + name() + ": '" + std::string(text) + "'");
    }
    Element n{static_cast<std::uint32_t>(num), q_};
    Element d{static_cast<std::uint32_t>(den), q_};
    return n / d;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t q_;
};

class RationalField {
 public:
  using Element = RationalElement;

  std::string name() const { return "Q"; }
  Element zero() const { return Element(); }
  Element one() const { return Element(BigRational(1)); }
  Element from_int(std::int64_t v) const { return Element(BigRational(v)); }
  Element parse(std::string_view text) const {
    auto f = detail::parse_fraction(text);
    return Element(f.numerator, f.denominator);
  }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

template <class F>
concept Field = std::equality_comparable<F> && requires(const F f, const typename F::Element a,
                                                        std::string_view text, std::int64_t n) {
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.from_int(n) } -> std::same_as<typename F::Element>;
  { f.parse(text) } -> std::same_as<typename F::Element>;
  { f.name() } -> std::convertible_to<std::string>;
  { a + a } -> std::same_as<typename F::Element>;
  { a - a } -> std::same_as<typename F::Element>;
  { a * a } -> std::same_as<typename F::Element>;
  { a / a } -> std::same_as<typename F::Element>;
  { -a } -> std::same_as<typename F::Element>;
  { a.inverse() } -> std::same_as<typename F::Element>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a == a } -> std::convertible_to<bool>;
  { a < a } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

template <class Element>
Element power(Element base, std::uint64_t exponent, const Element& one) {
  Element result = one;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

}  // namespace tower
