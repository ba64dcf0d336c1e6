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


#include <gtest/gtest.h>

#include <set>

#include "oracle/dense_oracle.hpp"
#include "test_util.hpp"

namespace tower {
namespace {

using testing::four_nodes;
using testing::kQ;
using testing::planar;
using testing::poly_q;

Monomial xy(unsigned a, unsigned b) { return Monomial::xy(a, b); }

std::vector<Monomial> leads(const std::vector<Polynomial<PrimeField>>& g, TermOrder o) {
  std::vector<Monomial> out;
  for (const auto& p : g) out.push_back(p.leading_monomial(o));
  return out;
}

TEST(Bm, SingleNode) {
  auto s = planar(kQ, {{2, 3}});
  for (auto o : testing::kAllOrders) {
    auto t = bm(s, o);
    ASSERT_EQ(t.groebner.size(), 2u);
    std::vector<Polynomial<RationalField>> want{poly_q({{1, 0, 1}, {0, 0, -2}}), poly_q({{0, 1, 1}, {0, 0, -3}})};
    if (compare(xy(0, 1), xy(1, 0), o) < 0) std::swap(want[0], want[1]);
    EXPECT_EQ(t.groebner, want);
    EXPECT_EQ(t.escalier, std::vector<Monomial>{xy(0, 0)});
    ASSERT_EQ(t.newton.size(), 1u);
    EXPECT_EQ(t.newton[0].polynomial, poly_q({{0, 0, 1}}));
  }
}

TEST(Bm, CollinearNodes) {
  auto t = bm(planar(kQ, {{0, 0}, {1, 0}, {2, 0}}), TermOrder::kTdlex);
  EXPECT_EQ(t.groebner, (std::vector{poly_q({{0, 1, 1}}), poly_q({{3, 0, 1}, {2, 0, -3}, {1, 0, 2}})}));
  EXPECT_EQ(t.escalier, (std::vector<Monomial>{xy(0, 0), xy(1, 0), xy(2, 0)}));
}

TEST(Bm, FourNodeExample) {
  auto s = four_nodes();
  auto t = bm(s, TermOrder::kTdlex);
  EXPECT_EQ(t.groebner, (std::vector{poly_q({{0, 2, 1}, {0, 1, -1}}), poly_q({{1, 1, 1}}),
                                     poly_q({{3, 0, 1}, {2, 0, -3}, {1, 0, 2}})}));
  EXPECT_EQ(t.escalier, (std::vector<Monomial>{xy(0, 0), xy(0, 1), xy(1, 0), xy(2, 0)}));
  auto o = oracle::make_oracle(s, TermOrder::kTdlex);
  EXPECT_EQ(t.groebner, o.groebner());
  EXPECT_TRUE(verify_triple(s, TermOrder::kTdlex, t).all_passed());
}

TEST(Bm, MatchesDenseOracleOnRandomSites) {
  std::mt19937_64 rng(17);
  for (std::uint32_t q : {7u, 101u}) {
    PrimeField f(q);
    for (int trial = 0; trial < 120; ++trial) {
      auto s = testing::random_site(f, 1 + rng() % 24, 7, rng);
      for (auto o : testing::kAllOrders) {
        auto t = bm(s, o);
        auto orc = oracle::make_oracle(s, o);
        EXPECT_EQ(t.escalier, orc.escalier());
        EXPECT_EQ(t.groebner, orc.groebner());
        auto report = verify_triple(s, o, t);
        for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
        EXPECT_LE(t.iterations, detail::iteration_ceiling(s.size()));
      }
    }
  }
}

TEST(Bm, WorksInThreeVariables) {
  PrimeField f(101);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    std::set<std::vector<std::int64_t>> pts;
    while (pts.size() < static_cast<std::size_t>(1 + trial % 12)) pts.insert({std::int64_t(rng() % 4), std::int64_t(rng() % 4), std::int64_t(rng() % 4)});
    std::vector<Site<PrimeField>::Node> nodes;
    for (const auto& p : pts) nodes.push_back({f.from_int(p[0]), f.from_int(p[1]), f.from_int(p[2])});
    Site<PrimeField> s(f, nodes);
    for (auto o : testing::kAllOrders) {
      auto t = bm(s, o);
      EXPECT_TRUE(verify_triple(s, o, t).all_passed());
    }
  }
}

TEST(Tbm, FourNodeSameTripleAsBm) {
  auto s = four_nodes();
  auto a = bm(s, TermOrder::kTdlex);
  auto b = tbm(s, TermOrder::kTdlex);
  EXPECT_EQ(a.groebner, b.groebner);
  EXPECT_EQ(a.escalier, b.escalier);
  EXPECT_TRUE(compare_triples(s, a, b).identical());
  EXPECT_TRUE(verify_triple(s, TermOrder::kTdlex, b).all_passed());
}

TEST(Tbm, SeedMatrixIsUnitUpperTriangular) {
  auto s = four_nodes();
  auto basis = drinb(s, TermOrder::kTdlex);
  const std::size_t mu = basis.elements.size();
  for (std::size_t h = 0; h < mu; ++h) {
    for (std::size_t k = 0; k <= h; ++k) {
      auto v = basis.elements[h].polynomial.eval(s[basis.elements[k].node]);
      EXPECT_EQ(v, h == k ? kQ.one() : kQ.zero());
    }
  }
}

TEST(Tbm, MaximalTowerOverF5) {
  auto s = random_tower_site(5, 15, Flavor::kX, 3);
  auto t = tbm(s, TermOrder::kTdlex);
  EXPECT_EQ(leads(t.groebner, TermOrder::kTdlex),
            (std::vector<Monomial>{xy(0, 5), xy(1, 4), xy(2, 3), xy(3, 2), xy(4, 1), xy(5, 0)}));
  EXPECT_EQ(t.groebner, bm(s, TermOrder::kTdlex).groebner);
}

TEST(Tbm, AgreesWithBmOnRandomTowers) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    for (auto o : testing::kAllOrders) {
      const std::size_t mu = 1 + (seed * 7) % 90;
      auto s = random_tower_site(PrimeField(101), mu, flavor_of(o), seed, 101);
      auto a = bm(s, o);
      auto b = tbm(s, o);
      EXPECT_TRUE(compare_triples(s, a, b).identical()) << to_string(o) << " seed " << seed;
      EXPECT_TRUE(compare_triples_structural(a, b).identical());
      EXPECT_TRUE(verify_triple(s, o, b).all_passed());
    }
  }
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto s = random_tower_site(kQ, 1 + seed * 2, Flavor::kY, seed, 10);
    auto a = bm(s, TermOrder::kTdinlex);
    auto b = tbm(s, TermOrder::kTdinlex);
    EXPECT_TRUE(compare_triples(s, a, b).identical());
  }
}

TEST(Tbm, NotTowerWithoutFlag) {
  auto s = planar(kQ, {{0, 0}, {1, 0}, {2, 0}, {5, 1}});
  try {
    (void)tbm(s, TermOrder::kLex);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotTower);
    EXPECT_NE(std::string(e.what()).find("5"), std::string::npos);
  }
  EXPECT_THROW((void)tbm(s, TermOrder::kTdlex, {.any_site = true}), Error);
  auto t = tbm(s, TermOrder::kLex, {.any_site = true});
  EXPECT_TRUE(compare_triples(s, t, bm(s, TermOrder::kLex)).identical());
}

TEST(Tbm, AnySiteLexAgreesWithBm) {
  std::mt19937_64 rng(23);
  PrimeField f(101);
  for (int trial = 0; trial < 100; ++trial) {
    auto s = testing::random_site(f, 1 + rng() % 30, 8, rng);
    for (auto o : {TermOrder::kLex, TermOrder::kInlex}) {
      EXPECT_TRUE(compare_triples(s, bm(s, o), tbm(s, o, {.any_site = true})).identical());
    }
  }
}

TEST(Verify, TamperedBasesAreCaught) {
  auto s = four_nodes();
  auto t = bm(s, TermOrder::kTdlex);

  auto scaled = t;
  scaled.groebner[0] = scaled.groebner[0].scaled(kQ.from_int(2));
  EXPECT_FALSE(is_reduced_groebner(scaled.groebner, TermOrder::kTdlex));
  EXPECT_FALSE(verify_triple(s, TermOrder::kTdlex, scaled).find("reduced")->passed);

  // Any dropped element leaves a monomial ideal with too many standard
  // monomials, even where the remaining set is still a Groebner basis.
  for (std::size_t k = 0; k < t.groebner.size(); ++k) {
    auto dropped = t;
    dropped.groebner.erase(dropped.groebner.begin() + static_cast<std::ptrdiff_t>(k));
    auto report = verify_triple(s, TermOrder::kTdlex, dropped);
    EXPECT_FALSE(report.all_passed());
    EXPECT_FALSE(report.find("escalier_matches_leading_terms")->passed);
  }
}

TEST(Verify, DroppingAnElementBreaksTheSPairCriterion) {
  auto s = planar(kQ, {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 2}});
  auto t = bm(s, TermOrder::kTdlex);
  int broken = 0;
  for (std::size_t k = 0; k < t.groebner.size(); ++k) {
    auto g = t.groebner;
    g.erase(g.begin() + static_cast<std::ptrdiff_t>(k));
    broken += !is_groebner(g, TermOrder::kTdlex);
  }
  EXPECT_GT(broken, 0);
}

TEST(Verify, NewtonTamperDetected) {
  auto s = four_nodes();
  auto t = tbm(s, TermOrder::kTdlex);
  std::swap(t.newton[0], t.newton[1]);
  EXPECT_FALSE(verify_triple(s, TermOrder::kTdlex, t).find("newton_triangular")->passed);
}

TEST(LagrangeForm, IsKroneckerAndOrderIndependent) {
  auto s = random_tower_site(PrimeField(101), 25, Flavor::kX, 9, 101);
  auto a = bm(s, TermOrder::kTdlex);
  auto l = lagrange_form(s, a);
  ASSERT_TRUE(l.has_value());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      EXPECT_EQ((*l)[i].eval(s[j]), i == j ? s.field().one() : s.field().zero());
    }
  }
  auto b = a;
  b.newton[3].polynomial = b.newton[3].polynomial + b.newton[5].polynomial;
  EXPECT_TRUE(lagrange_form(s, b).has_value());
  b.newton[4].polynomial = b.newton[2].polynomial;
  EXPECT_FALSE(lagrange_form(s, b).has_value());
}

}  // namespace
}  // namespace tower
