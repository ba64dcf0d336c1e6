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

// Degree-reducing interpolation by Newton forward substitution.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tower/bases.hpp"
#include "tower/moller.hpp"

namespace tower {

template <Field F>
struct InterpolationProblem {
  Site<F> site;
  std::vector<typename F::Element> values;  // aligned with site node order
};

enum class Method { kClosedForm, kBm };

inline std::string to_string(Method m) { return m == Method::kClosedForm ? "closed_form" : "bm"; }

inline Method parse_method(std::string_view s) {
  if (s == "closed_form" || s == "closed-form") return Method::kClosedForm;
  if (s == "bm") return Method::kBm;
  throw Error(ErrorCode::kParseError, "unknown method '" + std::string(s) + "'");
}

namespace detail {

template <Field F>
void check_problem(const InterpolationProblem<F>& p) {
  if (p.values.size() != p.site.size()) {
    throw Error(ErrorCode::kLengthMismatch, std::to_string(p.values.size()) + " values for " +
                                                std::to_string(p.site.size()) + " nodes");
  }
}

// sum c_k Q_k with c_k = f(u_k) - sum_{h<k} c_h Q_h(u_k).
template <Field F, class EvalAt>
Polynomial<F> forward_substitute(const InterpolationProblem<F>& p, const std::vector<std::size_t>& nodes,
                                 const std::vector<const Polynomial<F>*>& polys, EvalAt eval_at) {
  const F& field = p.site.field();
  std::vector<typename F::Element> c(nodes.size(), field.zero());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    auto v = p.values[nodes[k]];
    for (std::size_t h = 0; h < k; ++h) {
      if (!c[h].is_zero()) v -= c[h] * eval_at(h, nodes[k]);
    }
    c[k] = v;
  }
  Polynomial<F> out(field, p.site.dim());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (!c[k].is_zero()) out = out + polys[k]->scaled(c[k]);
  }
  return out;
}

}  // namespace detail

// The unique element of span(N) taking the given values. The closed form
// needs the preconditions of `drinb`; BM works on any site and order.
template <Field F>
Polynomial<F> interpolate(const InterpolationProblem<F>& p, TermOrder o, Method method) {
  detail::check_problem(p);
  const Site<F>& s = p.site;
  std::vector<std::size_t> nodes;
  std::vector<const Polynomial<F>*> polys;
  if (method == Method::kClosedForm) {
    const NewtonBasis<F> basis = drinb(s, o);
    for (const auto& e : basis.elements) {
      nodes.push_back(e.node);
      polys.push_back(&e.polynomial);
    }
    return detail::forward_substitute(p, nodes, polys, [&](std::size_t h, std::size_t node) {
      return basis.elements[h].eval(s[node][0], s[node][1], basis.flavor);
    });
  }
  const BasisTriple<F> t = bm(s, o);
  for (const auto& e : t.newton) {
    nodes.push_back(e.node);
    polys.push_back(&e.polynomial);
  }
  return detail::forward_substitute(p, nodes, polys, [&](std::size_t h, std::size_t node) {
    return t.newton[h].polynomial.eval(s[node]);
  });
}

// Interpolates the values of q on the site; true iff LM(interpolant) <= LM(q).
template <Field F>
bool degree_reduction_check(const Site<F>& s, TermOrder o, const Polynomial<F>& q, Method method = Method::kBm) {
  InterpolationProblem<F> p{s, {}};
  p.values.reserve(s.size());
  for (const auto& node : s.nodes()) p.values.push_back(q.eval(node));
  const Polynomial<F> r = interpolate(p, o, method);
  if (r.is_zero()) return true;
  if (q.is_zero()) return false;
  return compare(r.leading_monomial(o), q.leading_monomial(o), o) <= 0;
}

}  // namespace tower
