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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_util.hpp"
#include "tower/commands.hpp"

namespace tower {
namespace {

using testing::kQ;

std::string sample(const char* name) { return std::string(TOWER_SAMPLES_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("towerbm_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

CsvTable csv(const std::string& text) {
  std::istringstream in(text);
  return read_csv(in, "test input");
}

TEST(Io, FieldSpecs) {
  EXPECT_FALSE(parse_field_spec("Q").prime.has_value());
  EXPECT_EQ(parse_field_spec(" 101 ").prime, std::optional<std::uint32_t>(101));
  try {
    (void)parse_field_spec("100");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonPrimeField);
  }
  EXPECT_THROW((void)parse_field_spec("F7"), Error);
}

TEST(Io, SiteCsvWithHeaderAndFractions) {
  auto t = csv("# field: Q\n\n1/2, 0\n-3,2/3\n");
  ASSERT_TRUE(t.field.has_value());
  EXPECT_FALSE(t.field->prime.has_value());
  auto s = site_from_csv(kQ, t);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0][0], kQ.parse("1/2"));
  EXPECT_EQ(s[1][1], kQ.parse("2/3"));
}

TEST(Io, SiteCsvErrors) {
  EXPECT_THROW(csv(""), Error);
  EXPECT_THROW(csv("# only a comment\n"), Error);
  EXPECT_THROW(csv("1,2\n3\n"), Error);
  try {
    (void)site_from_csv(kQ, csv("1,2\n3,x\n"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  try {
    (void)site_from_csv(kQ, csv("1,2\n1,2\n"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicateNodes);
  }
}

TEST(Io, ValuesAlignedOrByCoordinates) {
  auto s = testing::four_nodes();
  auto aligned = values_from_csv(s, csv("0\n1\n2\n5\n"));
  auto triples = values_from_csv(s, csv("0,1,5\n2,0,2\n0,0,0\n1,0,1\n"));
  EXPECT_EQ(aligned, triples);
  EXPECT_THROW(values_from_csv(s, csv("0\n1\n2\n")), Error);
  EXPECT_THROW(values_from_csv(s, csv("0,1,5\n9,9,2\n0,0,0\n1,0,1\n")), Error);
  EXPECT_THROW(values_from_csv(s, csv("0,1,5\n0,1,2\n0,0,0\n1,0,1\n")), Error);
  EXPECT_THROW(values_from_csv(s, csv("0,1,5\n0,0,0\n1,0,1\n")), Error);
}

TEST(Io, PolynomialJsonRoundTrip) {
  auto p = testing::poly_q({{3, 0, 1}, {2, 0, -3}, {0, 1, 7}});
  auto j = polynomial_to_json(p, TermOrder::kTdlex);
  EXPECT_EQ(j[0]["exponents"], nlohmann::json::array({3, 0}));
  EXPECT_EQ(j[0]["coefficient"], "1");
  EXPECT_EQ(polynomial_from_json(kQ, 2, j), p);
  EXPECT_THROW(polynomial_from_json(kQ, 2, nlohmann::json::object()), Error);
  EXPECT_THROW(polynomial_from_json(kQ, 3, j), Error);
}

TEST(Cli, ClassifyFourNodes) {
  cli::Options opt;
  opt.input = sample("four_nodes.csv");
  opt.json = true;
  std::ostringstream out;
  EXPECT_EQ(cli::classify(opt, out), cli::kOk);
  auto j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j["mu"], 4);
  EXPECT_EQ(j["is_lower"], true);
  EXPECT_EQ(j["is_x_tower"], true);
  EXPECT_EQ(j["is_y_tower"], false);
  EXPECT_EQ(j["Sx_rowForm"], nlohmann::json::array({2, 0}));
  EXPECT_EQ(j["Sy_columnForm"], nlohmann::json::array({1, 0, 0}));
}

TEST(Cli, ClassifyEightNodes) {
  cli::Options opt;
  opt.input = sample("eight_nodes.csv");
  std::ostringstream out;
  EXPECT_EQ(cli::classify(opt, out), cli::kOk);
  EXPECT_NE(out.str().find("is_lower: false"), std::string::npos);
  EXPECT_NE(out.str().find("is_x_tower: true"), std::string::npos);
}

TEST(Cli, ClassifyEmptyFile) {
  cli::Options opt;
  opt.input = write_temp("empty.csv", "");
  std::ostringstream out;
  try {
    cli::classify(opt, out);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
  }
}

TEST(Cli, FieldFlagOverridesHeader) {
  cli::Options opt;
  opt.input = sample("four_nodes.csv");
  opt.field = "7";
  std::ostringstream out;
  cli::classify(opt, out);
  EXPECT_NE(out.str().find("field: F_7"), std::string::npos);
  opt.field = "8";
  EXPECT_THROW(cli::classify(opt, out), Error);
}

TEST(Cli, GroebnerBmAndTbmPrintTheSame) {
  cli::Options opt;
  opt.input = sample("four_nodes.csv");
  opt.verify = true;
  std::ostringstream a, b;
  EXPECT_EQ(cli::groebner(opt, a), cli::kOk);
  opt.algo = "tbm";
  EXPECT_EQ(cli::groebner(opt, b), cli::kOk);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str().find("1*x^3 + -3*x^2 + 2*x^1"), std::string::npos);
  EXPECT_NE(a.str().find("1*x^1*y^1"), std::string::npos);
  EXPECT_NE(a.str().find("1*y^2 + -1*y^1"), std::string::npos);

  opt.json = true;
  std::ostringstream j1, j2;
  cli::groebner(opt, j1);
  opt.algo = "bm";
  cli::groebner(opt, j2);
  EXPECT_EQ(j1.str(), j2.str());
  EXPECT_EQ(nlohmann::json::parse(j1.str())["verification"]["passed"], true);
}

TEST(Cli, GroebnerTbmOnNonTower) {
  cli::Options opt;
  opt.input = write_temp("off.csv", "0,0\n1,0\n2,0\n5,1\n");
  opt.algo = "tbm";
  std::ostringstream out;
  try {
    cli::groebner(opt, out);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotTower);
  }
  opt.order = TermOrder::kLex;
  opt.any_site = true;
  EXPECT_EQ(cli::groebner(opt, out), cli::kOk);
}

TEST(Cli, GroebnerNewtonListing) {
  cli::Options opt;
  opt.input = sample("tower_f101.csv");
  opt.newton = true;
  std::ostringstream out;
  EXPECT_EQ(cli::groebner(opt, out), cli::kOk);
  EXPECT_NE(out.str().find("Q (Newton"), std::string::npos);
  EXPECT_NE(out.str().find("field: F_101"), std::string::npos);
}

TEST(Cli, InterpolateBothValueLayouts) {
  cli::Options opt;
  opt.input = sample("four_nodes.csv");
  opt.verify = true;
  for (const char* values : {"four_values.csv", "four_values_xyf.csv"}) {
    for (const char* method : {"bm", "closed_form"}) {
      opt.values = sample(values);
      opt.method = method;
      std::ostringstream out;
      EXPECT_EQ(cli::interpolate(opt, out), cli::kOk);
      EXPECT_EQ(out.str(), "1*x^1 + 5*y^1\nresidual: pass\n");
    }
  }
}

TEST(Cli, BasesListing) {
  cli::Options opt;
  opt.input = sample("four_nodes.csv");
  std::ostringstream out;
  EXPECT_EQ(cli::bases(opt, out), cli::kOk);
  EXPECT_NE(out.str().find("monomial basis: 1, x^1, x^2, y^1"), std::string::npos);
  EXPECT_NE(out.str().find("phi[2,0] at (2,0): 1/2*x^2 + -1/2*x^1"), std::string::npos);
}

TEST(Cli, BenchSmallSizesAndCsv) {
  cli::Options opt;
  opt.sizes = {1, 30};
  opt.trials = 3;
  opt.csv = write_temp("bench.csv", "");
  std::ostringstream out, err;
  EXPECT_EQ(cli::bench(opt, out, err), cli::kOk);
  std::ifstream in(opt.csv);
  std::string header, row1, row2;
  std::getline(in, header);
  std::getline(in, row1);
  std::getline(in, row2);
  EXPECT_EQ(header, "mu,q,order,trials,bm_ms,tbm_ms,speedup,verified,seed");
  EXPECT_EQ(row1.rfind("1,65521,tdlex,3,", 0), 0u);
  EXPECT_NE(row2.find(",true,1"), std::string::npos);
}

TEST(Cli, BenchCapsSizesForSmallFields) {
  cli::Options opt;
  opt.sizes = {300};
  opt.trials = 1;
  opt.field = "23";
  opt.json = true;
  std::ostringstream out, err;
  EXPECT_EQ(cli::bench(opt, out, err), cli::kOk);
  EXPECT_NE(err.str().find("276"), std::string::npos);
  EXPECT_EQ(nlohmann::json::parse(out.str())[0]["mu"], 276);
}

TEST(Bench, SameSeedSameSite) {
  BenchmarkOptions o;
  o.trials = 3;
  auto a = benchmark_size(50, o);
  auto b = benchmark_size(50, o);
  EXPECT_TRUE(a.verified && b.verified);
  EXPECT_EQ(a.mu, b.mu);
  auto s1 = random_tower_site(PrimeField(65521), 50, Flavor::kX, o.seed, 65521);
  auto s2 = random_tower_site(PrimeField(65521), 50, Flavor::kX, o.seed, 65521);
  EXPECT_EQ(s1.nodes(), s2.nodes());
  EXPECT_EQ(bm(s1, o.order).groebner, bm(s2, o.order).groebner);
}

}  // namespace
}  // namespace tower
