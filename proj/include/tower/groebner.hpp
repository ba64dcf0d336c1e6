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

// Multivariate division, S-polynomials and the Buchberger S-pair criterion,
// used as verification oracles for the bases produced by the engine.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "tower/error.hpp"
#include "tower/polynomial.hpp"

namespace tower {

template <Field F>
struct DivisionResult {
  Polynomial<F> remainder;
  std::vector<Polynomial<F>> quotients;
};

// f = sum(quotients[k] * divisors[k]) + remainder, with no remainder monomial
// divisible by any leading monomial. The largest reducible monomial is always
// eliminated first and divisors are tried in the given order.
template <Field F>
DivisionResult<F> normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& divisors, TermOrder o) {
  using Element = typename F::Element;
  using Term = typename Polynomial<F>::Term;
  const F& field = f.field();
  const std::size_t dim = f.dim();

  std::vector<Monomial> lead_monomials;
  std::vector<Element> lead_inverses;
  for (const auto& g : divisors) {
    f.check_compatible(g);
    const auto& lt = g.leading(o);
    lead_monomials.push_back(lt.monomial);
    lead_inverses.push_back(lt.coefficient.inverse());
  }

  std::map<Monomial, Element, OrderGreater> work(OrderGreater{o});
  for (const auto& t : f.terms()) work.emplace(t.monomial, t.coefficient);

  std::vector<std::vector<Term>> quotient_terms(divisors.size());
  std::vector<Term> remainder_terms;

  while (!work.empty()) {
    auto top = work.begin();
    const Monomial m = top->first;
    const Element c = top->second;
    std::size_t k = 0;
    while (k < divisors.size() && !lead_monomials[k].divides(m)) ++k;
    if (k == divisors.size()) {
      remainder_terms.push_back({m, c});
      work.erase(top);
      continue;
    }
    const Monomial shift = lead_monomials[k].cofactor_in(m);
    const Element factor = c * lead_inverses[k];
    quotient_terms[k].push_back({shift, factor});
    for (const auto& t : divisors[k].terms()) {
      const Monomial target = t.monomial * shift;
      const Element delta = factor * t.coefficient;
      auto [it, inserted] = work.try_emplace(target, -delta);
      if (!inserted) {
        it->second -= delta;
        if (it->second.is_zero()) work.erase(it);
      }
    }
  }

  DivisionResult<F> result{Polynomial<F>::from_terms(field, dim, std::move(remainder_terms)), {}};
  result.quotients.reserve(divisors.size());
  for (auto& q : quotient_terms) result.quotients.push_back(Polynomial<F>::from_terms(field, dim, std::move(q)));
  return result;
}

template <Field F>
Polynomial<F> reduce(const Polynomial<F>& f, const std::vector<Polynomial<F>>& divisors, TermOrder o) {
  return normal_form(f, divisors, o).remainder;
}

// (lcm / LT(f)) f - (lcm / LT(g)) g.
template <Field F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g, TermOrder o) {
  f.check_compatible(g);
  const auto& lf = f.leading(o);
  const auto& lg = g.leading(o);
  const Monomial l = lf.monomial.lcm(lg.monomial);
  return f.times_term(lf.monomial.cofactor_in(l), lf.coefficient.inverse()) -
         g.times_term(lg.monomial.cofactor_in(l), lg.coefficient.inverse());
}

namespace detail {

// True iff f reduces to zero; stops at the first irreducible term.
template <Field F>
bool reduces_to_zero(const Polynomial<F>& f, const std::vector<Polynomial<F>>& divisors,
                     const std::vector<Monomial>& leads, const std::vector<typename F::Element>& inverses,
                     TermOrder o) {
  using Element = typename F::Element;
  std::map<Monomial, Element, OrderGreater> work(OrderGreater{o});
  for (const auto& t : f.terms()) work.emplace(t.monomial, t.coefficient);
  while (!work.empty()) {
    auto top = work.begin();
    const Monomial m = top->first;
    std::size_t k = 0;
    while (k < divisors.size() && !leads[k].divides(m)) ++k;
    if (k == divisors.size()) return false;
    const Monomial shift = leads[k].cofactor_in(m);
    const Element factor = top->second * inverses[k];
    for (const auto& t : divisors[k].terms()) {
      const Element delta = factor * t.coefficient;
      auto [it, inserted] = work.try_emplace(t.monomial * shift, -delta);
      if (!inserted) {
        it->second -= delta;
        if (it->second.is_zero()) work.erase(it);
      }
    }
  }
  return true;
}

}  // namespace detail

// Buchberger's criterion: every pairwise S-polynomial reduces to zero. Pairs
// with coprime leading monomials, and pairs (a, b) with some c whose leading
// monomial divides lcm(a, b) and whose pairs with a and b were settled
// earlier, are known to reduce to zero and are not recomputed.
template <Field F>
bool is_groebner(const std::vector<Polynomial<F>>& basis, TermOrder o) {
  for (const auto& g : basis) {
    if (g.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "zero element in a polynomial set");
  }
  const std::size_t n = basis.size();
  std::vector<Monomial> leads;
  std::vector<typename F::Element> inverses;
  for (const auto& g : basis) {
    const auto& lt = g.leading(o);
    leads.push_back(lt.monomial);
    inverses.push_back(lt.coefficient.inverse());
  }
  std::vector<std::vector<char>> settled(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      settled[a][b] = settled[b][a] = 1;
      if (leads[a].coprime_with(leads[b])) continue;
      const Monomial l = leads[a].lcm(leads[b]);
      bool chained = false;
      for (std::size_t c = 0; c < n && !chained; ++c) {
        chained = c != a && c != b && settled[a][c] && settled[b][c] && leads[c].divides(l);
      }
      if (chained) continue;
      if (!detail::reduces_to_zero(s_polynomial(basis[a], basis[b], o), basis, leads, inverses, o)) return false;
    }
  }
  return true;
}

// Monic elements, and no monomial of any element divisible by the leading
// monomial of another. Does not check the Groebner property itself.
template <Field F>
bool is_monic_and_autoreduced(const std::vector<Polynomial<F>>& basis, TermOrder o) {
  std::vector<Monomial> leads;
  for (const auto& g : basis) {
    const auto& lt = g.leading(o);
    if (!lt.coefficient.is_one()) return false;
    leads.push_back(lt.monomial);
  }
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (const auto& t : basis[a].terms()) {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (b != a && leads[b].divides(t.monomial)) return false;
      }
    }
  }
  return true;
}

template <Field F>
bool is_reduced_groebner(const std::vector<Polynomial<F>>& basis, TermOrder o) {
  if (!is_groebner(basis, o)) throw Error(ErrorCode::kNotAGroebnerBasis, "S-pair criterion fails");
  return is_monic_and_autoreduced(basis, o);
}

}  // namespace tower
