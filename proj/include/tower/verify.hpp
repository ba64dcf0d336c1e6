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

// Independent checks on BM / TBM output, and the canonical Lagrange form
// used to compare Newton bases computed for different node orders.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tower/bases.hpp"
#include "tower/covering.hpp"
#include "tower/groebner.hpp"
#include "tower/moller.hpp"

namespace tower {

namespace detail {

// table[n][i] = monomials[n] evaluated at node i.
template <Field F>
std::vector<std::vector<typename F::Element>> evaluation_table(const Site<F>& s, const std::vector<Monomial>& monomials) {
  using Element = typename F::Element;
  std::vector<std::vector<Element>> table;
  table.reserve(monomials.size());
  for (const auto& m : monomials) {
    std::vector<Element> row(s.size(), s.field().one());
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t k = 0; k < s.dim(); ++k) {
        if (m[k] != 0) row[i] = row[i] * power(s[i][k], m[k], s.field().one());
      }
    }
    table.push_back(std::move(row));
  }
  return table;
}

// Coefficients of each polynomial over the given monomial list, or nullopt if
// some polynomial leaves the span of the list.
template <Field F>
std::optional<std::vector<std::vector<typename F::Element>>> dense_coefficients(
    const std::vector<Polynomial<F>>& polys, const std::vector<Monomial>& monomials, const F& field) {
  std::map<Monomial, std::size_t> position;
  for (std::size_t n = 0; n < monomials.size(); ++n) position.emplace(monomials[n], n);
  std::vector<std::vector<typename F::Element>> out;
  out.reserve(polys.size());
  for (const auto& p : polys) {
    std::vector<typename F::Element> row(monomials.size(), field.zero());
    for (const auto& t : p.terms()) {
      auto it = position.find(t.monomial);
      if (it == position.end()) return std::nullopt;
      row[it->second] = t.coefficient;
    }
    out.push_back(std::move(row));
  }
  return out;
}

// Standard monomials of the monomial ideal generated by `leads`, or nullopt
// once more than `limit` are found (including the infinite case).
inline std::optional<std::set<Monomial>> standard_monomials(const std::vector<Monomial>& leads, std::size_t dim,
                                                             std::size_t limit) {
  std::set<Monomial> seen;
  std::vector<Monomial> frontier{Monomial(dim)};
  auto outside = [&](const Monomial& m) {
    return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  if (!outside(frontier.front())) return seen;
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    Monomial m = frontier.back();
    frontier.pop_back();
    for (std::size_t k = 0; k < dim; ++k) {
      Monomial next = m * Monomial::variable(dim, k);
      if (outside(next) && seen.insert(next).second) {
        if (seen.size() > limit) return std::nullopt;
        frontier.push_back(next);
      }
    }
  }
  return seen;
}

}  // namespace detail

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
  const CheckResult* find(std::string_view name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

template <Field F>
VerificationReport verify_triple(const Site<F>& s, TermOrder o, const BasisTriple<F>& t) {
  VerificationReport report;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  const F& field = s.field();
  const std::size_t mu = s.size();

  bool nonzero = std::none_of(t.groebner.begin(), t.groebner.end(), [](const auto& g) { return g.is_zero(); });
  {
    std::string bad;
    for (std::size_t g = 0; g < t.groebner.size() && bad.empty(); ++g) {
      for (std::size_t i = 0; i < mu; ++i) {
        if (!t.groebner[g].eval(s[i]).is_zero()) {
          bad = "G[" + std::to_string(g) + "] does not vanish at " + s.describe(i);
          break;
        }
      }
    }
    add("vanishing", bad.empty(), bad);
  }
  add("groebner", nonzero && is_groebner(t.groebner, o), nonzero ? "" : "zero element");
  add("reduced", nonzero && is_monic_and_autoreduced(t.groebner, o));

  add("escalier_size", t.escalier.size() == mu,
      std::to_string(t.escalier.size()) + " monomials for " + std::to_string(mu) + " nodes");

  const std::set<Monomial> escalier(t.escalier.begin(), t.escalier.end());
  bool closed = escalier.size() == t.escalier.size();
  for (const auto& m : t.escalier) {
    for (std::size_t k = 0; k < m.dim() && closed; ++k) {
      if (m[k] == 0) continue;
      Monomial d = m;
      d[k] -= 1;
      closed = escalier.count(d) > 0;
    }
  }
  add("escalier_closed", closed);

  std::vector<Monomial> leads;
  if (nonzero) {
    for (const auto& g : t.groebner) leads.push_back(g.leading_monomial(o));
  }
  auto standard = detail::standard_monomials(leads, s.dim(), mu);
  add("escalier_matches_leading_terms", nonzero && standard && *standard == escalier,
      standard ? std::to_string(standard->size()) + " standard monomials" : "escalier of LT(G) exceeds mu");

  // Newton triangularity, evaluated from the polynomials themselves.
  {
    std::vector<Polynomial<F>> polys;
    for (const auto& e : t.newton) polys.push_back(e.polynomial);
    auto coeffs = detail::dense_coefficients(polys, t.escalier, field);
    std::string bad;
    std::set<Monomial> newton_leads;
    for (const auto& p : polys) {
      if (!p.is_zero()) newton_leads.insert(p.leading_monomial(o));
    }
    if (!coeffs || t.newton.size() != t.escalier.size()) {
      bad = "Newton basis leaves span(N) or has the wrong size";
    } else if (newton_leads != escalier) {
      bad = "leading monomials of Q differ from N";
    } else {
      const auto table = detail::evaluation_table(s, t.escalier);
      for (std::size_t k = 0; k < t.newton.size() && bad.empty(); ++k) {
        for (std::size_t h = 0; h <= k; ++h) {
          auto v = field.zero();
          const std::size_t node = t.newton[h].node;
          for (std::size_t n = 0; n < t.escalier.size(); ++n) {
            if (!(*coeffs)[k][n].is_zero()) v += (*coeffs)[k][n] * table[n][node];
          }
          const bool expected_one = h == k;
          if (expected_one ? !(v == field.one()) : !v.is_zero()) {
            bad = "Q[" + std::to_string(k) + "] at " + s.describe(node) + " is " + v.to_string();
            break;
          }
        }
      }
    }
    add("newton_triangular", bad.empty(), bad);
  }

  if (s.dim() == 2 && is_total_degree(o)) {
    const Flavor f = flavor_of(o);
    auto a = analyze(s);
    if (is_tower(a, f).tower) {
      auto predicted = predicted_leading_terms(s, f);
      std::set<Monomial> want(predicted.begin(), predicted.end());
      std::set<Monomial> got(leads.begin(), leads.end());
      add("predicted_leading_terms", want == got && leads.size() == predicted.size());
    }
  }
  return report;
}

// The fundamental Lagrange polynomials l_i (l_i(node_j) = delta_ij), indexed
// by site node and recovered from the Newton basis Q. Two Newton bases of the
// same interpolation space give identical forms whatever their node order.
// nullopt if Q is not a basis of span(N).
template <Field F>
std::optional<std::vector<Polynomial<F>>> lagrange_form(const Site<F>& s, const BasisTriple<F>& t) {
  using Element = typename F::Element;
  const F& field = s.field();
  const std::size_t mu = s.size();
  if (t.newton.size() != mu || t.escalier.size() != mu) return std::nullopt;

  std::vector<Polynomial<F>> polys;
  for (const auto& e : t.newton) polys.push_back(e.polynomial);
  auto coeffs = detail::dense_coefficients(polys, t.escalier, field);
  if (!coeffs) return std::nullopt;
  const auto table = detail::evaluation_table(s, t.escalier);

  // Augmented [M | I] with M[k][i] = Q_k(node_i).
  std::vector<std::vector<Element>> aug(mu, std::vector<Element>(2 * mu, field.zero()));
  for (std::size_t k = 0; k < mu; ++k) {
    for (std::size_t n = 0; n < mu; ++n) {
      const Element c = (*coeffs)[k][n];
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < mu; ++i) aug[k][i] += c * table[n][i];
    }
    aug[k][mu + k] = field.one();
  }
  for (std::size_t col = 0; col < mu; ++col) {
    std::size_t p = col;
    while (p < mu && aug[p][col].is_zero()) ++p;
    if (p == mu) return std::nullopt;
    std::swap(aug[p], aug[col]);
    const Element inv = aug[col][col].inverse();
    for (auto& e : aug[col]) e = e * inv;
    for (std::size_t r = 0; r < mu; ++r) {
      if (r == col || aug[r][col].is_zero()) continue;
      const Element f = aug[r][col];
      for (std::size_t c = col; c < 2 * mu; ++c) {
        if (!aug[col][c].is_zero()) aug[r][c] -= f * aug[col][c];
      }
    }
  }
  // Rows of M^{-1} are aug[.][mu..]; (C M) = I with C = M^{-1} means
  // l_i = sum_k C[i][k] Q_k where C's row i is the inverse's row i.
  std::vector<Polynomial<F>> out;
  out.reserve(mu);
  for (std::size_t i = 0; i < mu; ++i) {
    std::vector<Element> combo(mu, field.zero());
    for (std::size_t k = 0; k < mu; ++k) {
      const Element c = aug[i][mu + k];
      if (c.is_zero()) continue;
      for (std::size_t n = 0; n < mu; ++n) {
        if (!(*coeffs)[k][n].is_zero()) combo[n] += c * (*coeffs)[k][n];
      }
    }
    std::vector<typename Polynomial<F>::Term> terms;
    for (std::size_t n = 0; n < mu; ++n) terms.push_back({t.escalier[n], combo[n]});
    out.push_back(Polynomial<F>::from_terms(field, s.dim(), std::move(terms)));
  }
  return out;
}

struct TripleComparison {
  bool groebner_equal = false;
  bool escalier_equal = false;
  bool newton_equivalent = false;
  bool identical() const { return groebner_equal && escalier_equal && newton_equivalent; }
};

// G and N compared exactly; Q compared through the canonical Lagrange form.
template <Field F>
TripleComparison compare_triples(const Site<F>& s, const BasisTriple<F>& a, const BasisTriple<F>& b) {
  TripleComparison out;
  out.groebner_equal = a.groebner == b.groebner;
  out.escalier_equal = a.escalier == b.escalier;
  auto la = lagrange_form(s, a);
  auto lb = lagrange_form(s, b);
  out.newton_equivalent = la && lb && *la == *lb;
  return out;
}

// Cheaper exact check for large sites: G and N compared exactly, and each Q
// must have its leading monomials equal to N and its support inside N.
template <Field F>
TripleComparison compare_triples_structural(const BasisTriple<F>& a, const BasisTriple<F>& b) {
  TripleComparison out;
  out.groebner_equal = a.groebner == b.groebner;
  out.escalier_equal = a.escalier == b.escalier;
  auto spans_escalier = [&](const BasisTriple<F>& t) {
    const std::set<Monomial> n(a.escalier.begin(), a.escalier.end());
    std::set<Monomial> leads;
    for (const auto& e : t.newton) {
      if (e.polynomial.is_zero()) return false;
      leads.insert(e.polynomial.leading_monomial(t.order));
      for (const auto& term : e.polynomial.terms()) {
        if (!n.count(term.monomial)) return false;
      }
    }
    return leads == n && t.newton.size() == n.size();
  };
  out.newton_equivalent = a.order == b.order && spans_escalier(a) && spans_escalier(b);
  return out;
}

}  // namespace tower
