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

// Seeded generator of random x- and y-tower sites.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tower/covering.hpp"
#include "tower/error.hpp"
#include "tower/site.hpp"

namespace tower {

// Largest tower whose coordinates come from a pool of `pool` values: line
// sizes pool, pool-1, ..., 1.
constexpr std::uint64_t max_tower_size(std::uint64_t pool) { return pool * (pool + 1) / 2; }

namespace detail {

inline std::vector<std::uint64_t> sample_distinct(std::mt19937_64& rng, std::uint64_t pool, std::size_t count) {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  if (pool <= 4 * count + 64) {
    std::vector<std::uint64_t> all(pool);
    std::iota(all.begin(), all.end(), std::uint64_t{0});
    for (std::size_t k = 0; k < count; ++k) {
      std::uniform_int_distribution<std::uint64_t> pick(k, pool - 1);
      std::swap(all[k], all[pick(rng)]);
      out.push_back(all[k]);
    }
    return out;
  }
  std::uniform_int_distribution<std::uint64_t> pick(0, pool - 1);
  while (out.size() < count) {
    std::uint64_t v = pick(rng);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

inline std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

// Smallest s with s (s + 1) / 2 >= remaining: the shortest first line from
// which `remaining` nodes fit into strictly decreasing lines.
inline std::uint64_t min_leading_size(std::uint64_t remaining) {
  std::uint64_t s = 0;
  while (s * (s + 1) / 2 < remaining) ++s;
  return s;
}

}  // namespace detail

// Strictly decreasing line sizes summing exactly to target, first line at
// most `pool`. The first line stays within twice its minimum so the
// profiles look like staircases rather than a single long line.
inline std::vector<std::uint64_t> random_tower_profile(std::uint64_t target, std::uint64_t pool, std::mt19937_64& rng) {
  if (target == 0) throw Error(ErrorCode::kPreconditionUnmet, "a tower needs at least one node");
  if (target > max_tower_size(pool)) {
    throw Error(ErrorCode::kTargetTooLarge, std::to_string(target) + " nodes requested but the largest tower over " +
                                                std::to_string(pool) + " coordinate values has " +
                                                std::to_string(max_tower_size(pool)) + " (= q(q+1)/2)");
  }
  std::vector<std::uint64_t> sizes;
  std::uint64_t remaining = target;
  std::uint64_t upper = std::min({pool, target, 2 * detail::min_leading_size(target)});
  while (remaining > 0) {
    const std::uint64_t lo = detail::min_leading_size(remaining);
    const std::uint64_t hi = std::min(upper, remaining);
    const std::uint64_t s = detail::uniform(rng, lo, hi);
    sizes.push_back(s);
    remaining -= s;
    upper = s - 1;
  }
  return sizes;
}

// Random x-tower (rows) or y-tower (columns) with coordinates field.from_int(k),
// k < pool. Node order is shuffled. Deterministic in all arguments.
template <Field F>
Site<F> random_tower_site(const F& field, std::uint64_t target, Flavor flavor, std::uint64_t seed,
                          std::uint64_t pool) {
  std::mt19937_64 rng(seed);
  const auto sizes = random_tower_profile(target, pool, rng);
  const auto line_coords = detail::sample_distinct(rng, pool, sizes.size());
  const auto base = detail::sample_distinct(rng, pool, sizes.front());

  std::vector<typename Site<F>::Node> nodes;
  nodes.reserve(target);
  for (std::size_t line = 0; line < sizes.size(); ++line) {
    std::vector<std::uint64_t> members = base;
    if (line > 0) {
      std::shuffle(members.begin(), members.end(), rng);
      members.resize(sizes[line]);
    }
    for (auto m : members) {
      auto along = field.from_int(static_cast<std::int64_t>(m));
      auto across = field.from_int(static_cast<std::int64_t>(line_coords[line]));
      if (flavor == Flavor::kX) {
        nodes.push_back({along, across});
      } else {
        nodes.push_back({across, along});
      }
    }
  }
  std::shuffle(nodes.begin(), nodes.end(), rng);
  return Site<F>(field, std::move(nodes));
}

inline Site<PrimeField> random_tower_site(std::uint32_t q, std::uint64_t target, Flavor flavor, std::uint64_t seed) {
  PrimeField field(q);
  return random_tower_site(field, target, flavor, seed, q);
}

}  // namespace tower
