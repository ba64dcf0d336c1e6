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
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tower/error.hpp"
#include "tower/field.hpp"
#include "tower/monomial.hpp"

namespace tower {

// Sparse polynomial over a field: terms sorted by exponent vector (storage
// order), no stored zero coefficients. Leading-term queries take the active
// term order as an argument.
template <Field F>
class Polynomial {
 public:
  using FieldType = F;
  using Element = typename F::Element;

  struct Term {
    Monomial monomial;
    Element coefficient;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial(F field, std::size_t dim) : field_(std::move(field)), dim_(Monomial(dim).dim()) {}

  static Polynomial constant(const F& field, std::size_t dim, const Element& c) {
    return term(field, Monomial(dim), c);
  }
  static Polynomial term(const F& field, const Monomial& m, const Element& c) {
    Polynomial p(field, m.dim());
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }
  static Polynomial variable(const F& field, std::size_t dim, std::size_t k) {
    return term(field, Monomial::variable(dim, k), field.one());
  }
  // Combines duplicate monomials and drops zeros.
  static Polynomial from_terms(const F& field, std::size_t dim, std::vector<Term> terms) {
    Polynomial p(field, dim);
    for (const auto& t : terms) {
      if (t.monomial.dim() != dim) throw Error(ErrorCode::kDimensionMismatch, "term dimension");
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
        p.terms_.back().coefficient += t.coefficient;
        if (p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
      } else if (!t.coefficient.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const F& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Element coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.monomial < key; });
    if (it != terms_.end() && it->monomial == m) return it->coefficient;
    return field_.zero();
  }

  const Term& leading(TermOrder o) const {
    if (terms_.empty()) throw Error(ErrorCode::kZeroPolynomial, "leading term of the zero polynomial");
    const Term* best = &terms_.front();
    for (const auto& t : terms_) {
      if (compare(t.monomial, best->monomial, o) > 0) best = &t;
    }
    return *best;
  }
  const Monomial& leading_monomial(TermOrder o) const { return leading(o).monomial; }
  const Element& leading_coefficient(TermOrder o) const { return leading(o).coefficient; }

  Polynomial operator+(const Polynomial& g) const { return merge(g, false); }
  Polynomial operator-(const Polynomial& g) const { return merge(g, true); }
  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coefficient = -t.coefficient;
    return p;
  }

  Polynomial operator*(const Polynomial& g) const {
    check_compatible(g);
    std::vector<Term> products;
    products.reserve(terms_.size() * g.terms_.size());
    for (const auto& a : terms_) {
      for (const auto& b : g.terms_) products.push_back({a.monomial * b.monomial, a.coefficient * b.coefficient});
    }
    return from_terms(field_, dim_, std::move(products));
  }

  Polynomial scaled(const Element& c) const {
    if (c.is_zero()) return Polynomial(field_, dim_);
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coefficient = t.coefficient * c;
    return p;
  }

  // c * m * this; multiplying by a monomial keeps storage order intact.
  Polynomial times_term(const Monomial& m, const Element& c) const {
    m.check_dim(Monomial(dim_));
    if (c.is_zero()) return Polynomial(field_, dim_);
    Polynomial p(field_, dim_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coefficient * c});
    return p;
  }

  Element eval(std::span<const Element> point) const {
    if (point.size() != dim_) {
      throw Error(ErrorCode::kDimensionMismatch, "evaluation point of dimension " + std::to_string(point.size()) +
                                                     " for polynomial in " + std::to_string(dim_) + " variables");
    }
    std::vector<std::vector<Element>> powers(dim_);
    for (std::size_t k = 0; k < dim_; ++k) {
      std::uint32_t top = 0;
      for (const auto& t : terms_) top = std::max(top, t.monomial[k]);
      powers[k].reserve(top + 1);
      powers[k].push_back(field_.one());
      for (std::uint32_t e = 1; e <= top; ++e) powers[k].push_back(powers[k].back() * point[k]);
    }
    Element sum = field_.zero();
    for (const auto& t : terms_) {
      Element v = t.coefficient;
      for (std::size_t k = 0; k < dim_; ++k) {
        if (t.monomial[k] != 0) v = v * powers[k][t.monomial[k]];
      }
      sum += v;
    }
    return sum;
  }
  Element eval(const std::vector<Element>& point) const { return eval(std::span<const Element>(point)); }

  // Monomials sorted by decreasing o.
  std::vector<Term> sorted_terms(TermOrder o) const {
    std::vector<Term> out = terms_;
    std::sort(out.begin(), out.end(),
              [o](const Term& a, const Term& b) { return compare(a.monomial, b.monomial, o) > 0; });
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  void check_compatible(const Polynomial& g) const {
    if (!(field_ == g.field_)) throw Error(ErrorCode::kMixedContexts, field_.name() + " vs " + g.field_.name());
    if (dim_ != g.dim_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  std::to_string(dim_) + " vs " + std::to_string(g.dim_) + " variables");
    }
  }

 private:
  Polynomial merge(const Polynomial& g, bool subtract) const {
    check_compatible(g);
    Polynomial p(field_, dim_);
    p.terms_.reserve(terms_.size() + g.terms_.size());
    auto a = terms_.begin();
    auto b = g.terms_.begin();
    auto push_b = [&](const Term& t) {
      p.terms_.push_back({t.monomial, subtract ? -t.coefficient : t.coefficient});
    };
    while (a != terms_.end() || b != g.terms_.end()) {
      if (b == g.terms_.end() || (a != terms_.end() && a->monomial < b->monomial)) {
        p.terms_.push_back(*a++);
      } else if (a == terms_.end() || b->monomial < a->monomial) {
        push_b(*b++);
      } else {
        Element c = subtract ? a->coefficient - b->coefficient : a->coefficient + b->coefficient;
        if (!c.is_zero()) p.terms_.push_back({a->monomial, c});
        ++a;
        ++b;
      }
    }
    return p;
  }

  F field_;
  std::size_t dim_;
  std::vector<Term> terms_;
};

// Terms in strictly decreasing o, coefficient always printed, e.g.
// "1*x^3 + -3*x^2 + 2*x^1". Constant terms print as the bare coefficient.
template <Field F>
std::string to_text(const Polynomial<F>& p, TermOrder o) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.sorted_terms(o)) {
    if (!out.empty()) out += " + ";
    out += t.coefficient.to_string();
    if (!t.monomial.is_one()) out += "*" + to_string(t.monomial);
  }
  return out;
}

// Product of (x_k - root) factors in one variable, expanded.
template <Field F>
Polynomial<F> linear_factor_product(const F& field, std::size_t dim, std::size_t k,
                                    std::span<const typename F::Element> roots) {
  Polynomial<F> p = Polynomial<F>::constant(field, dim, field.one());
  const Polynomial<F> var = Polynomial<F>::variable(field, dim, k);
  for (const auto& r : roots) p = p * (var - Polynomial<F>::constant(field, dim, r));
  return p;
}

}  // namespace tower
