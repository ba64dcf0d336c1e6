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

// Buchberger-Moller: the reduced Groebner basis G of the vanishing ideal of a
// site, its escalier N and a Newton basis Q, computed by linear algebra on
// evaluation vectors. tbm() seeds the same loop with the closed-form N and Q
// of a tower site so that only border monomials remain to be processed.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tower/bases.hpp"
#include "tower/covering.hpp"
#include "tower/error.hpp"
#include "tower/groebner.hpp"
#include "tower/polynomial.hpp"
#include "tower/site.hpp"

namespace tower {

template <Field F>
struct NewtonEntry {
  Polynomial<F> polynomial;
  std::size_t node = 0;  // site index where the polynomial takes the value 1
};

// G sorted by increasing leading monomial, N increasing. Q is listed in its
// triangular order: Q[k] is 1 at Q[k].node and 0 at Q[h].node for h < k.
template <Field F>
struct BasisTriple {
  TermOrder order = TermOrder::kTdlex;
  std::vector<Polynomial<F>> groebner;
  std::vector<Monomial> escalier;
  std::vector<NewtonEntry<F>> newton;
  std::size_t iterations = 0;  // monomials taken from the candidate list
};

namespace detail {

// Rows of evaluation vectors with one pivot column each; every row vanishes at
// the pivots of the rows recorded before it, and pivot entries are 1.
// producers[r] holds the coefficients of the row's polynomial over escalier
// positions. Columns index nodes in `columns` order.
template <Field F>
class MollerLoop {
 public:
  using Element = typename F::Element;

  MollerLoop(const Site<F>& site, TermOrder order, std::vector<std::size_t> columns)
      : site_(site), order_(order), columns_(std::move(columns)), candidates_(OrderLess{order}) {
    powers_.resize(site.dim());
    for (auto& axis : powers_) axis.push_back(std::vector<Element>(columns_.size(), site.field().one()));
  }

  std::size_t escalier_size() const { return escalier_.size(); }

  // Adds a known escalier monomial with its Newton polynomial (dense over the
  // escalier positions) and its evaluation row.
  void seed(const Monomial& t, std::vector<Element> producer, std::vector<Element> row, std::size_t pivot) {
    escalier_.push_back(t);
    producers_.push_back(std::move(producer));
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
  }

  void add_candidate(const Monomial& t) { candidates_.insert(t); }

  void run(std::size_t iteration_ceiling) {
    const Element zero = site_.field().zero();
    while (!candidates_.empty()) {
      if (++iterations_ > iteration_ceiling) {
        throw Error(ErrorCode::kInternalDisagreement,
                    "candidate loop exceeded " + std::to_string(iteration_ceiling) + " iterations");
      }
      const Monomial t = *candidates_.begin();
      candidates_.erase(candidates_.begin());

      std::vector<Element> v = evaluate(t);
      std::vector<std::pair<std::size_t, Element>> multipliers;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Element a = v[pivots_[r]];
        if (a.is_zero()) continue;
        const auto& row = rows_[r];
        for (std::size_t c = 0; c < v.size(); ++c) {
          if (!row[c].is_zero()) v[c] -= a * row[c];
        }
        multipliers.emplace_back(r, a);
      }

      std::vector<Element> combination(escalier_.size(), zero);
      for (const auto& [r, a] : multipliers) {
        const auto& p = producers_[r];
        for (std::size_t n = 0; n < p.size(); ++n) {
          if (!p[n].is_zero()) combination[n] += a * p[n];
        }
      }

      std::size_t pivot = 0;
      while (pivot < v.size() && v[pivot].is_zero()) ++pivot;

      if (pivot == v.size()) {
        // t - sum a_r q_r vanishes on the site.
        leading_.push_back(t);
        relations_.push_back(std::move(combination));
        for (auto it = candidates_.begin(); it != candidates_.end();) {
          it = t.divides(*it) ? candidates_.erase(it) : std::next(it);
        }
        continue;
      }

      const Element scale = v[pivot].inverse();
      for (auto& e : v) e = e * scale;
      std::vector<Element> producer(escalier_.size() + 1, zero);
      for (std::size_t n = 0; n < combination.size(); ++n) producer[n] = -combination[n] * scale;
      producer.back() = scale;
      seed(t, std::move(producer), std::move(v), pivot);

      for (std::size_t k = 0; k < site_.dim(); ++k) {
        const Monomial next = t * Monomial::variable(site_.dim(), k);
        bool skip = false;
        for (const auto& c : candidates_) {
          if (c.divides(next)) { skip = true; break; }
        }
        for (std::size_t g = 0; !skip && g < leading_.size(); ++g) skip = leading_[g].divides(next);
        if (!skip) candidates_.insert(next);
      }
    }
  }

  BasisTriple<F> finish() const {
    const F& field = site_.field();
    const std::size_t dim = site_.dim();
    BasisTriple<F> out;
    out.order = order_;
    out.iterations = iterations_;

    for (std::size_t g = 0; g < leading_.size(); ++g) {
      std::vector<typename Polynomial<F>::Term> terms{{leading_[g], field.one()}};
      for (std::size_t n = 0; n < relations_[g].size(); ++n) {
        if (!relations_[g][n].is_zero()) terms.push_back({escalier_[n], -relations_[g][n]});
      }
      out.groebner.push_back(Polynomial<F>::from_terms(field, dim, std::move(terms)));
    }
    std::sort(out.groebner.begin(), out.groebner.end(), [this](const auto& a, const auto& b) {
      return compare(a.leading_monomial(order_), b.leading_monomial(order_), order_) < 0;
    });

    out.escalier = escalier_;
    std::sort(out.escalier.begin(), out.escalier.end(), OrderLess{order_});

    for (std::size_t r = 0; r < producers_.size(); ++r) {
      std::vector<typename Polynomial<F>::Term> terms;
      for (std::size_t n = 0; n < producers_[r].size(); ++n) {
        if (!producers_[r][n].is_zero()) terms.push_back({escalier_[n], producers_[r][n]});
      }
      out.newton.push_back({Polynomial<F>::from_terms(field, dim, std::move(terms)), columns_[pivots_[r]]});
    }
    return out;
  }

 private:
  const std::vector<Element>& axis_power(std::size_t k, std::uint32_t e) {
    auto& table = powers_[k];
    while (table.size() <= e) {
      std::vector<Element> next = table.back();
      for (std::size_t c = 0; c < columns_.size(); ++c) next[c] = next[c] * site_[columns_[c]][k];
      table.push_back(std::move(next));
    }
    return table[e];
  }

  std::vector<Element> evaluate(const Monomial& t) {
    std::vector<Element> v(columns_.size(), site_.field().one());
    for (std::size_t k = 0; k < site_.dim(); ++k) {
      if (t[k] == 0) continue;
      const auto& p = axis_power(k, t[k]);
      for (std::size_t c = 0; c < v.size(); ++c) v[c] = v[c] * p[c];
    }
    return v;
  }

  const Site<F>& site_;
  TermOrder order_;
  std::vector<std::size_t> columns_;
  std::set<Monomial, OrderLess> candidates_;
  std::vector<std::vector<std::vector<Element>>> powers_;  // [axis][exponent][column]

  std::vector<Monomial> escalier_;
  std::vector<std::vector<Element>> producers_;
  std::vector<std::vector<Element>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Monomial> leading_;
  std::vector<std::vector<Element>> relations_;
  std::size_t iterations_ = 0;
};

inline std::size_t iteration_ceiling(std::size_t mu) { return 10 * mu + 100; }

// Each tail is already in normal form with respect to the other elements
// when monomials are processed in increasing order; check that instead of
// assuming it.
template <Field F>
void assert_interreduced(const BasisTriple<F>& t) {
  const auto& g = t.groebner;
  for (std::size_t a = 0; a < g.size(); ++a) {
    const auto& lt = g[a].leading(t.order);
    if (!lt.coefficient.is_one()) throw Error(ErrorCode::kInternalDisagreement, "non-monic basis element");
    const Polynomial<F> tail = g[a] - Polynomial<F>::term(g[a].field(), lt.monomial, lt.coefficient);
    std::vector<Polynomial<F>> others;
    for (std::size_t b = 0; b < g.size(); ++b) {
      if (b != a) others.push_back(g[b]);
    }
    if (!(reduce(tail, others, t.order) == tail)) {
      throw Error(ErrorCode::kInternalDisagreement, "interreduction changed a basis element");
    }
  }
}

}  // namespace detail

template <Field F>
BasisTriple<F> bm(const Site<F>& s, TermOrder o) {
  std::vector<std::size_t> columns(s.size());
  for (std::size_t k = 0; k < columns.size(); ++k) columns[k] = k;
  detail::MollerLoop<F> loop(s, o, std::move(columns));
  loop.add_candidate(Monomial(s.dim()));
  loop.run(detail::iteration_ceiling(s.size()));
  auto out = loop.finish();
  detail::assert_interreduced(out);
  return out;
}

struct TbmOptions {
  // Accept non-tower sites for lex / inlex, where the closed forms still hold.
  bool any_site = false;
};

template <Field F>
BasisTriple<F> tbm(const Site<F>& s, TermOrder o, TbmOptions options = {}) {
  using Element = typename F::Element;
  const auto analysis = analyze(s);
  const Flavor f = flavor_of(o);
  if (!(options.any_site && !is_total_degree(o))) {
    auto t = is_tower(analysis, f);
    if (!t.tower) {
      throw Error(ErrorCode::kNotTower, "tbm with " + std::string(to_string(o)) +
                                            (f == Flavor::kX ? " needs an " : " needs a ") +
                                            std::string(to_string(f)) + "-tower site: " + t.witness);
    }
  }

  const F& field = s.field();
  const Element zero = field.zero();
  const auto newton = drinb(s, analysis, o);
  const std::size_t mu = s.size();
  const auto& lines = analysis.lines(f);
  const std::size_t along_axis = f == Flavor::kX ? 0 : 1;

  std::vector<std::size_t> columns(mu);
  std::vector<std::size_t> line_of(mu);
  for (std::size_t h = 0; h < mu; ++h) {
    columns[h] = newton.elements[h].node;
    const auto idx = newton.elements[h].index;
    line_of[h] = f == Flavor::kX ? idx.j : idx.i;
  }

  // B(h, k) = phi_h(u_k) = scale_h * A[line_h](u_k) * P_h(u_k) with
  // A[J] = prod_{t<J} (across - c_t), zero on lines t < J, and P_h the
  // along-factor prefix product inside line J.
  std::vector<std::vector<Element>> across(lines.size(), std::vector<Element>(lines.size(), zero));
  for (std::size_t J = 0; J < lines.size(); ++J) {
    for (std::size_t L = J; L < lines.size(); ++L) {
      Element v = field.one();
      for (std::size_t t = 0; t < J; ++t) v = v * (lines[L].coordinate - lines[t].coordinate);
      across[J][L] = v;
    }
  }
  std::vector<std::vector<Element>> rows(mu, std::vector<Element>(mu, zero));
  std::size_t first_of_line = 0;
  for (std::size_t J = 0; J < lines.size(); ++J) {
    const auto& members = lines[J].members;
    for (std::size_t k = first_of_line; k < mu; ++k) {
      const Element& along = s[columns[k]][along_axis];
      Element prefix = across[J][line_of[k]];
      for (std::size_t pos = 0; pos < members.size(); ++pos) {
        const std::size_t h = first_of_line + pos;
        rows[h][k] = newton.elements[h].scale * prefix;
        prefix = prefix * (along - members[pos]);
      }
    }
    first_of_line += members.size();
  }

  detail::MollerLoop<F> loop(s, o, columns);
  std::vector<Monomial> escalier;
  escalier.reserve(mu);
  for (const auto& e : newton.elements) escalier.push_back(cell_monomial(e.index));
  std::size_t width = 0, height = 0;
  for (const auto& m : escalier) {
    width = std::max<std::size_t>(width, m[0] + 1);
    height = std::max<std::size_t>(height, m[1] + 1);
  }
  auto slot = [width](const Monomial& m) { return static_cast<std::size_t>(m[1]) * width + m[0]; };
  std::vector<std::size_t> position_of(width * height, mu);  // cell -> escalier position
  for (std::size_t n = 0; n < mu; ++n) position_of[slot(escalier[n])] = n;

  for (std::size_t h = 0; h < mu; ++h) {
    std::vector<Element> producer(mu, zero);
    for (const auto& t : newton.elements[h].polynomial.terms()) producer[position_of[slot(t.monomial)]] = t.coefficient;
    loop.seed(escalier[h], std::move(producer), std::move(rows[h]), h);
  }

  std::set<Monomial> in_escalier(escalier.begin(), escalier.end());
  for (const auto& t : escalier) {
    for (std::size_t k = 0; k < 2; ++k) {
      const Monomial next = t * Monomial::variable(2, k);
      if (!in_escalier.count(next)) loop.add_candidate(next);
    }
  }
  loop.run(detail::iteration_ceiling(mu));
  auto out = loop.finish();
  detail::assert_interreduced(out);
  return out;
}

}  // namespace tower
