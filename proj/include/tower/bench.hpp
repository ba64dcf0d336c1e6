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

// BM versus TBM timing on seeded random tower sites.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tower/moller.hpp"
#include "tower/random_site.hpp"
#include "tower/verify.hpp"

namespace tower {

struct BenchmarkRow {
  std::size_t mu = 0;
  std::uint32_t q = 0;
  TermOrder order = TermOrder::kTdlex;
  std::size_t trials = 0;
  double bm_ms = 0;
  double tbm_ms = 0;
  double speedup = 0;  // bm_ms / tbm_ms
  bool verified = false;
  std::uint64_t seed = 0;
};

inline constexpr const char* kBenchmarkCsvHeader = "mu,q,order,trials,bm_ms,tbm_ms,speedup,verified,seed";

inline std::string to_csv(const BenchmarkRow& r) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << r.mu << ',' << r.q << ',' << to_string(r.order) << ',' << r.trials
      << ',' << r.bm_ms << ',' << r.tbm_ms << ',' << r.speedup << ',' << (r.verified ? "true" : "false") << ','
      << r.seed;
  return out.str();
}

struct BenchmarkOptions {
  std::uint32_t q = 65521;
  TermOrder order = TermOrder::kTdlex;
  std::size_t trials = 5;
  std::uint64_t seed = 1;
};

namespace detail {

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

template <class Fn>
double time_ms(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace detail

// One row: the site is generated from (q, mu, seed), the two triples are
// checked for equality, then each algorithm is timed `trials` times.
inline BenchmarkRow benchmark_size(std::size_t mu, const BenchmarkOptions& opt) {
  if (opt.trials == 0) throw Error(ErrorCode::kPreconditionUnmet, "trials must be positive");
  if (!is_total_degree(opt.order) && opt.order != TermOrder::kLex && opt.order != TermOrder::kInlex) {
    throw Error(ErrorCode::kPreconditionUnmet, "unsupported order");
  }
  const PrimeField field(opt.q);
  const Site<PrimeField> s = random_tower_site(field, mu, flavor_of(opt.order), opt.seed, opt.q);
  BenchmarkRow row{mu, opt.q, opt.order, opt.trials, 0, 0, 0, false, opt.seed};

  const auto expected = bm(s, opt.order);
  const auto fast = tbm(s, opt.order);
  if (!compare_triples_structural(expected, fast).identical()) {
    throw Error(ErrorCode::kInternalDisagreement, "tbm differs from bm at mu=" + std::to_string(mu) + " q=" +
                                                      std::to_string(opt.q) + " seed=" + std::to_string(opt.seed));
  }
  row.verified = true;

  std::vector<double> bm_times, tbm_times;
  for (std::size_t t = 0; t < opt.trials; ++t) {
    bm_times.push_back(detail::time_ms([&] { (void)bm(s, opt.order); }));
    tbm_times.push_back(detail::time_ms([&] { (void)tbm(s, opt.order); }));
  }
  row.bm_ms = detail::median(bm_times);
  row.tbm_ms = detail::median(tbm_times);
  row.speedup = row.tbm_ms > 0 ? row.bm_ms / row.tbm_ms : 0;
  return row;
}

inline std::vector<BenchmarkRow> run_benchmark(const std::vector<std::size_t>& sizes, const BenchmarkOptions& opt) {
  std::vector<BenchmarkRow> rows;
  for (auto mu : sizes) rows.push_back(benchmark_size(mu, opt));
  return rows;
}

}  // namespace tower
