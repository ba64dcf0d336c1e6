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


// towerbm: classify interpolation sites, build closed-form bases, compute
// (G, N, Q) with BM or TBM, interpolate, and benchmark.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "tower/commands.hpp"

namespace {

void add_site_flags(CLI::App* cmd, tower::cli::Options& opt, std::string& order) {
  cmd->add_option("--input", opt.input, "site CSV, one node per line")->required();
  cmd->add_option("--field", opt.field, "prime modulus or Q (overrides the file header)");
  cmd->add_option("--order", order, "lex, inlex, tdlex or tdinlex")->capture_default_str();
  cmd->add_option("--seed", opt.seed, "random seed")->capture_default_str();
  cmd->add_flag("--json", opt.json, "machine-readable output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interpolation on tower sites: BM and TBM"};
  app.require_subcommand(1);
  tower::cli::Options opt;
  std::string order = "tdlex";

  auto* classify = app.add_subcommand("classify", "lower / x-tower / y-tower classification");
  add_site_flags(classify, opt, order);

  auto* bases = app.add_subcommand("bases", "closed-form monomial and Newton bases");
  add_site_flags(bases, opt, order);

  auto* groebner = app.add_subcommand("groebner", "reduced Groebner basis, escalier and Newton basis");
  add_site_flags(groebner, opt, order);
  groebner->add_option("--algo", opt.algo, "bm or tbm")->capture_default_str();
  groebner->add_flag("--any-site", opt.any_site, "allow tbm with lex/inlex on any site");
  groebner->add_flag("--verify", opt.verify, "append the verification report");
  groebner->add_flag("--newton", opt.newton, "print the raw Newton basis instead of the Lagrange form");

  auto* interp = app.add_subcommand("interpolate", "degree-reducing interpolant for given values");
  add_site_flags(interp, opt, order);
  interp->add_option("--values", opt.values, "values CSV: one per line, or x,y,f rows")->required();
  interp->add_option("--method", opt.method, "closed_form or bm")->capture_default_str();
  interp->add_flag("--verify", opt.verify, "check the interpolant at every node");

  auto* bench = app.add_subcommand("bench", "BM versus TBM timings on random tower sites");
  bench->add_option("--sizes", opt.sizes, "node counts")->delimiter(',')->capture_default_str();
  bench->add_option("--field", opt.field, "prime modulus (default 65521)");
  bench->add_option("--order", order, "lex, inlex, tdlex or tdinlex")->capture_default_str();
  bench->add_option("--trials", opt.trials, "timed runs per size (median reported)")->capture_default_str();
  bench->add_option("--seed", opt.seed, "random seed")->capture_default_str();
  bench->add_option("--csv", opt.csv, "write rows to this CSV file");
  bench->add_flag("--json", opt.json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    opt.order = tower::parse_term_order(order);
    if (*classify) return tower::cli::classify(opt, std::cout);
    if (*bases) return tower::cli::bases(opt, std::cout);
    if (*groebner) return tower::cli::groebner(opt, std::cout);
    if (*interp) return tower::cli::interpolate(opt, std::cout);
    if (*bench) return tower::cli::bench(opt, std::cout, std::cerr);
  } catch (const tower::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return tower::cli::kFailure;
  }
  return tower::cli::kFailure;
}
