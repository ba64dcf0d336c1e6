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


// Builds a small tower site, computes its reduced Groebner basis with both
// algorithms and interpolates a few values.

#include <iostream>

#include "tower/tower.hpp"

int main() {
  using namespace tower;
  const RationalField q;
  const auto site = make_planar_site(q, {{0, 0}, {1, 0}, {2, 0}, {0, 1}});

  std::cout << "x-tower: " << (is_x_tower(site).tower ? "yes" : "no") << '\n';

  const auto slow = bm(site, TermOrder::kTdlex);
  const auto fast = tbm(site, TermOrder::kTdlex);
  std::cout << "G:\n";
  for (const auto& g : fast.groebner) std::cout << "  " << to_text(g, TermOrder::kTdlex) << '\n';
  std::cout << "same triple: " << (compare_triples(site, slow, fast).identical() ? "yes" : "no") << '\n';

  InterpolationProblem<RationalField> p{site, {q.from_int(0), q.from_int(1), q.from_int(2), q.from_int(5)}};
  std::cout << "interpolant: " << to_text(interpolate(p, TermOrder::kTdlex, Method::kClosedForm), TermOrder::kTdlex)
            << '\n';
}
