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

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tower/error.hpp"
#include "tower/field.hpp"

namespace tower {

// Nonempty ordered collection of pairwise distinct nodes in F^d. Input order
// is preserved; every algorithm reports node indices against it.
template <Field F>
class Site {
 public:
  using Element = typename F::Element;
  using Node = std::vector<Element>;

  Site(F field, std::vector<Node> nodes) : field_(std::move(field)), nodes_(std::move(nodes)) {
    if (nodes_.empty()) throw Error(ErrorCode::kEmptySite, "a site needs at least one node");
    dim_ = nodes_.front().size();
    if (dim_ == 0) throw Error(ErrorCode::kDimensionMismatch, "nodes need at least one coordinate");
    for (const auto& n : nodes_) {
      if (n.size() != dim_) {
        throw Error(ErrorCode::kDimensionMismatch, "nodes of dimension " + std::to_string(dim_) + " and " +
                                                       std::to_string(n.size()));
      }
    }
    sorted_.resize(nodes_.size());
    std::iota(sorted_.begin(), sorted_.end(), std::size_t{0});
    std::sort(sorted_.begin(), sorted_.end(), [this](std::size_t a, std::size_t b) { return nodes_[a] < nodes_[b]; });
    for (std::size_t k = 1; k < sorted_.size(); ++k) {
      if (nodes_[sorted_[k - 1]] == nodes_[sorted_[k]]) {
        throw Error(ErrorCode::kDuplicateNodes, "node " + describe(sorted_[k]) + " appears more than once");
      }
    }
  }

  const F& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const Node& operator[](std::size_t k) const { return nodes_[k]; }

  // Index of an exactly matching node.
  std::optional<std::size_t> find(const Node& node) const {
    auto it = std::lower_bound(sorted_.begin(), sorted_.end(), node,
                               [this](std::size_t k, const Node& key) { return nodes_[k] < key; });
    if (it != sorted_.end() && nodes_[*it] == node) return *it;
    return std::nullopt;
  }

  std::string describe(std::size_t k) const {
    std::string out = "(";
    for (std::size_t c = 0; c < dim_; ++c) {
      if (c) out += ",";
      out += nodes_[k][c].to_string();
    }
    return out + ")";
  }

  void require_planar() const {
    if (dim_ != 2) {
      throw Error(ErrorCode::kWrongDimension, "operation needs a planar site, got dimension " + std::to_string(dim_));
    }
  }

 private:
  F field_;
  std::vector<Node> nodes_;
  std::size_t dim_ = 0;
  std::vector<std::size_t> sorted_;
};

template <Field F>
Site<F> make_planar_site(const F& field, const std::vector<std::pair<std::int64_t, std::int64_t>>& points) {
  std::vector<typename Site<F>::Node> nodes;
  nodes.reserve(points.size());
  for (auto [x, y] : points) nodes.push_back({field.from_int(x), field.from_int(y)});
  return Site<F>(field, std::move(nodes));
}

}  // namespace tower
