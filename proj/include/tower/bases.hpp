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

// Closed-form degree-reducing interpolation bases on planar sites: the
// monomial basis N_x / N_y, the Newton basis Q_x / Q_y in product form, the
// predicted leading terms of the tdlex vanishing ideal on x-towers, and the
// vanishing ideal of collinear nodes.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tower/covering.hpp"
#include "tower/error.hpp"
#include "tower/polynomial.hpp"
#include "tower/site.hpp"

namespace tower {

// lex / tdlex read the site by rows, inlex / tdinlex by columns.
constexpr Flavor flavor_of(TermOrder o) { return is_first_dominant(o) ? Flavor::kX : Flavor::kY; }

constexpr IndexOrder newton_index_order(Flavor f) { return f == Flavor::kX ? IndexOrder::kInlex : IndexOrder::kLex; }

// The total-degree orders only admit closed forms on towers of the matching
// flavor; lex and inlex work on every site.
template <Field F>
void require_closed_form(const CoveringAnalysis<F>& a, TermOrder o) {
  if (!is_total_degree(o)) return;
  const Flavor f = flavor_of(o);
  auto t = is_tower(a, f);
  if (!t.tower) {
    throw Error(ErrorCode::kNotTower, std::string("order ") + std::string(to_string(o)) +
                                          (f == Flavor::kX ? " needs an " : " needs a ") +
                                          std::string(to_string(f)) + "-tower site: " + t.witness);
  }
}

struct MonomialBasis {
  std::vector<Monomial> monomials;  // cells of the lower set in Newton index order
  LowerSet source;
  Flavor flavor = Flavor::kX;
};

inline Monomial cell_monomial(IndexPair c) { return Monomial::xy(c.i, c.j); }

template <Field F>
MonomialBasis drimb(const CoveringAnalysis<F>& a, TermOrder o) {
  require_closed_form(a, o);
  const Flavor f = flavor_of(o);
  MonomialBasis out{{}, lower_set(a, f), f};
  for (auto c : out.source.cells(newton_index_order(f))) out.monomials.push_back(cell_monomial(c));
  return out;
}

template <Field F>
MonomialBasis drimb(const Site<F>& s, TermOrder o) {
  return drimb(analyze(s), o);
}

// phi_ij = scale * prod_{t<j} (y - y_t) * prod_{s<i} (x - x_sj) for the
// x-flavor; the y-flavor swaps the roles of x and y.
template <Field F>
struct NewtonElement {
  using Element = typename F::Element;

  IndexPair index;
  std::size_t node = 0;                // site index of u_ij
  Element scale;                       // 1 / (product of the factors at u_ij)
  std::vector<Element> across_roots;   // y_0..y_{j-1} (x-flavor)
  std::vector<Element> along_roots;    // x_0j..x_{i-1,j} (x-flavor)
  Polynomial<F> polynomial;

  // Product-form evaluation at (x, y).
  Element eval(const Element& x, const Element& y, Flavor f) const {
    const Element& along = f == Flavor::kX ? x : y;
    const Element& across = f == Flavor::kX ? y : x;
    Element v = scale;
    for (const auto& r : across_roots) v = v * (across - r);
    for (const auto& r : along_roots) v = v * (along - r);
    return v;
  }
};

template <Field F>
struct NewtonBasis {
  Flavor flavor = Flavor::kX;
  std::vector<NewtonElement<F>> elements;  // increasing Newton index order
};

namespace detail {

template <class Element>
std::vector<Element> expand_roots(const std::vector<Element>& roots, const Element& one) {
  std::vector<Element> c{one};
  for (const auto& r : roots) {
    std::vector<Element> next(c.size() + 1, one - one);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= c[k] * r;
    }
    c = std::move(next);
  }
  return c;  // c[k] is the coefficient of t^k
}

}  // namespace detail

template <Field F>
NewtonBasis<F> drinb(const Site<F>& s, const CoveringAnalysis<F>& a, TermOrder o) {
  using Element = typename F::Element;
  require_closed_form(a, o);
  const F& field = s.field();
  const Flavor f = flavor_of(o);
  const std::size_t along_axis = f == Flavor::kX ? 0 : 1;
  const std::size_t across_axis = 1 - along_axis;
  const auto& lines = a.lines(f);

  NewtonBasis<F> out{f, {}};
  out.elements.reserve(s.size());
  for (std::size_t line = 0; line < lines.size(); ++line) {
    std::vector<Element> across_roots;
    for (std::size_t t = 0; t < line; ++t) across_roots.push_back(lines[t].coordinate);
    const auto across_coeffs = detail::expand_roots(across_roots, field.one());
    Element across_value = field.one();
    for (const auto& r : across_roots) across_value = across_value * (lines[line].coordinate - r);

    for (std::size_t pos = 0; pos < lines[line].size(); ++pos) {
      NewtonElement<F> e{f == Flavor::kX ? IndexPair{static_cast<std::uint32_t>(pos), static_cast<std::uint32_t>(line)}
                                         : IndexPair{static_cast<std::uint32_t>(line), static_cast<std::uint32_t>(pos)},
                         lines[line].node_indices[pos],
                         field.one(),
                         across_roots,
                         {lines[line].members.begin(), lines[line].members.begin() + static_cast<std::ptrdiff_t>(pos)},
                         Polynomial<F>(field, 2)};
      Element value = across_value;
      for (const auto& r : e.along_roots) value = value * (lines[line].members[pos] - r);
      e.scale = value.inverse();

      const auto along_coeffs = detail::expand_roots(e.along_roots, field.one());
      std::vector<typename Polynomial<F>::Term> terms;
      terms.reserve(along_coeffs.size() * across_coeffs.size());
      for (std::uint32_t p = 0; p < along_coeffs.size(); ++p) {
        for (std::uint32_t q = 0; q < across_coeffs.size(); ++q) {
          Monomial m(2);
          m[along_axis] = p;
          m[across_axis] = q;
          terms.push_back({m, e.scale * along_coeffs[p] * across_coeffs[q]});
        }
      }
      e.polynomial = Polynomial<F>::from_terms(field, 2, std::move(terms));
      out.elements.push_back(std::move(e));
    }
  }
  return out;
}

template <Field F>
NewtonBasis<F> drinb(const Site<F>& s, TermOrder o) {
  return drinb(s, analyze(s), o);
}

// Minimal monomials outside a lower set, listed by increasing row:
// x^{m_0+1}, x^{m_j+1} y^j where m_j < m_{j-1}, and y^{nu+1}.
inline std::vector<Monomial> corners(const LowerSet& s) {
  const auto& m = s.row_form();
  std::vector<Monomial> out;
  for (std::uint32_t j = 0; j < m.size(); ++j) {
    if (j == 0 || m[j] < m[j - 1]) out.push_back(Monomial::xy(m[j] + 1, j));
  }
  out.push_back(Monomial::xy(0, static_cast<std::uint32_t>(m.size())));
  return out;
}

// {x^{m_0+1}, x^{m_1+1} y, ..., x^{m_nu+1} y^nu, y^{nu+1}} for an x-tower with
// row form (m_0, ..., m_nu); the y-flavor is the transpose for y-towers.
template <Field F>
std::vector<Monomial> predicted_leading_terms(const Site<F>& s, Flavor f = Flavor::kX) {
  auto a = analyze(s);
  auto t = is_tower(a, f);
  if (!t.tower) throw Error(ErrorCode::kNotTower, t.witness);
  std::vector<Monomial> out;
  if (f == Flavor::kX) {
    const auto m = lower_set(a, f).row_form();
    for (std::uint32_t j = 0; j < m.size(); ++j) out.push_back(Monomial::xy(m[j] + 1, j));
    out.push_back(Monomial::xy(0, static_cast<std::uint32_t>(m.size())));
  } else {
    const auto n = lower_set(a, f).column_form();
    for (std::uint32_t i = 0; i < n.size(); ++i) out.push_back(Monomial::xy(i, n[i] + 1));
    out.push_back(Monomial::xy(static_cast<std::uint32_t>(n.size()), 0));
  }
  return out;
}

// Vanishing ideal of nodes on one horizontal line y = y_0:
// {(x - x_0)...(x - x_m), y - y_0}, reduced for all four orders.
template <Field F>
std::vector<Polynomial<F>> line_ideal(const Site<F>& s) {
  s.require_planar();
  const auto& y0 = s[0][1];
  std::vector<typename F::Element> xs;
  for (const auto& n : s.nodes()) {
    if (!(n[1] == y0)) {
      throw Error(ErrorCode::kNotCollinear, "ordinates " + y0.to_string() + " and " + n[1].to_string() + " differ");
    }
    xs.push_back(n[0]);
  }
  const F& field = s.field();
  return {linear_factor_product<F>(field, 2, 0, xs),
          Polynomial<F>::variable(field, 2, 1) - Polynomial<F>::constant(field, 2, y0)};
}

}  // namespace tower
